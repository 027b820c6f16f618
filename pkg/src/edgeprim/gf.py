"""Small finite fields GF(p^f) for the projective-line constructions.

Elements are integers 0..q-1 whose base-p digits are polynomial coefficients
(little-endian) modulo a fixed primitive polynomial; x (encoded as p) is a
primitive root for every shipped polynomial, which is asserted at build.
"""

_PRIMITIVE_POLYS = {
    # (p, f): little-endian coefficients c with x^f = c[0] + c[1] x + ...
    (2, 2): [1, 1],
    (2, 3): [1, 1, 0],
    (2, 4): [1, 1, 0, 0],
    (2, 5): [1, 0, 1, 0, 0],
    (3, 2): [1, 1],
    (3, 3): [2, 1, 0],
    (5, 2): [3, 1],
    (7, 2): [4, 1],
}


def factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            m = q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, f
    raise ValueError(f"{q} is not a prime power")


class GF:
    def __init__(self, q):
        p, f = factor_prime_power(q)
        self.q = q
        self.p = p
        self.f = f
        if f == 1:
            self._add = [[(a + b) % p for b in range(p)] for a in range(p)]
            self._mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            poly = _PRIMITIVE_POLYS.get((p, f))
            if poly is None:
                raise ValueError(f"no primitive polynomial shipped for GF({q})")
            self._build_tables(poly)
        # primitive root
        self.gen = self._find_generator()

    def _build_tables(self, poly):
        p, f, q = self.p, self.f, self.q

        def digits(a):
            out = []
            for _ in range(f):
                out.append(a % p)
                a //= p
            return out

        def undigits(ds):
            out = 0
            for d in reversed(ds):
                out = out * p + d
            return out

        add = [[0] * q for _ in range(q)]
        for a in range(q):
            da = digits(a)
            for b in range(q):
                db = digits(b)
                add[a][b] = undigits([(x + y) % p for x, y in zip(da, db)])
        self._add = add

        # multiplication by x with reduction
        def times_x(a):
            ds = digits(a)
            top = ds[-1]
            ds = [0] + ds[:-1]
            if top:
                ds = [(d + top * c) % p for d, c in zip(ds, poly)]
            return undigits(ds)

        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            acc = a
            row = mul[a]
            # multiply a by each b via digit expansion of b
            for b in range(q):
                db = digits(b)
                total = 0
                shifted = a
                for d in db:
                    if d:
                        term = shifted
                        for _ in range(d - 1):
                            term = add[term][shifted]
                        total = add[total][term]
                    shifted = times_x(shifted)
                row[b] = total
        self._mul = mul

    def _find_generator(self):
        for g in range(2, self.q):
            seen = set()
            x = 1
            for _ in range(self.q - 1):
                x = self._mul[x][g]
                seen.add(x)
            if len(seen) == self.q - 1:
                return g
        raise AssertionError("no primitive root found")

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul[out][base]
            base = self._mul[base][base]
            e >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        return self.pow(a, self.q - 2)

    def sub(self, a, b):
        return self._add[a][self.negate(b)]

    def negate(self, a):
        # find b with a + b = 0 (precomputable but q is tiny)
        row = self._add[a]
        for b in range(self.q):
            if row[b] == 0:
                return b
        raise AssertionError

    def frobenius(self, a):
        return self.pow(a, self.p)

    def is_square(self, a):
        if a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1 if self.q % 2 else True

    def elements(self):
        return range(self.q)
