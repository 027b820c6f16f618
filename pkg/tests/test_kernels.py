import os
import subprocess
import sys

import numpy as np

from edgeprim import _kernels


def test_block_refine_agrees_with_reference():
    rng = np.random.default_rng(42)
    for n in (6, 20, 101):
        gens = np.stack([rng.permutation(n) for _ in range(3)]).astype(np.int64)
        fast = _kernels.block_refine(gens, [0], [1])
        ref = _kernels._py_block_refine(gens, np.array([0]), np.array([1]), n)
        # same partition up to label names
        remap = {}
        ok = True
        for a, b in zip(fast.tolist(), ref.tolist()):
            if a in remap:
                ok = ok and remap[a] == b
            else:
                remap[a] = b
        assert ok


def test_orbit_partition_agrees():
    rng = np.random.default_rng(7)
    n = 60
    gens = np.stack([rng.permutation(n) for _ in range(2)]).astype(np.int64)
    fast = _kernels.orbit_partition(gens)
    ref = _kernels._py_orbit_partition(gens, n)
    assert np.array_equal(fast, ref)


def test_numpy_fallback_env_flag():
    """A subprocess forced onto the fallback still answers correctly."""
    script = (
        "from edgeprim import _kernels, perm, psl2\n"
        "assert _kernels.BACKEND == 'numpy'\n"
        "g = psl2.psl2_family(7, 'psl')\n"
        "assert g.order == 168\n"
        "assert perm.primitivity_kind(g).kind == 'primitive'\n"
        "print('fallback-ok')\n"
    )
    proc = subprocess.run(
        [sys.executable, "-c", script],
        env={**os.environ, "EDGEPRIM_KERNELS": "numpy"},
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert "fallback-ok" in proc.stdout
