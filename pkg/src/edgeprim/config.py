"""Run-time budgets and global configuration.

Every potentially expensive operation is bounded by an explicit budget so a
bad input fails fast instead of hanging.  Defaults are ample for everything
the test suite exercises; all of them can be overridden per call or through
environment variables (EDGEPRIM_MAX_POINTS etc.).
"""

import os
from dataclasses import dataclass, field, replace


class BudgetError(RuntimeError):
    """An operation would exceed a configured budget."""

    def __init__(self, budget_name, needed, allowed):
        super().__init__(
            f"budget '{budget_name}' exceeded: need {needed}, allowed {allowed}"
        )
        self.budget_name = budget_name
        self.needed = needed
        self.allowed = allowed


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Budgets:
    # domain sizes for orbit / block algorithms
    max_points: int = field(default_factory=lambda: _env_int("EDGEPRIM_MAX_POINTS", 10**6))
    # full element enumeration (conjugacy classes, centralizers, ...)
    max_elements: int = field(default_factory=lambda: _env_int("EDGEPRIM_MAX_ELEMENTS", 10**6))
    # coset enumeration per subgroup
    max_cosets: int = field(default_factory=lambda: _env_int("EDGEPRIM_MAX_COSETS", 10**5))
    # canonical-form backtracking
    max_canon_vertices: int = field(default_factory=lambda: _env_int("EDGEPRIM_MAX_CANON", 10**4))
    # structured (wreath) coset materialisation
    max_structured_vertices: int = field(
        default_factory=lambda: _env_int("EDGEPRIM_MAX_STRUCT_VERTS", 10**5)
    )
    max_structured_edges: int = field(
        default_factory=lambda: _env_int("EDGEPRIM_MAX_STRUCT_EDGES", 5 * 10**6)
    )
    girth_cap: int = field(default_factory=lambda: _env_int("EDGEPRIM_GIRTH_CAP", 16))
    s_arc_cap: int = field(default_factory=lambda: _env_int("EDGEPRIM_SARC_CAP", 8))

    def check(self, name, needed):
        allowed = getattr(self, name)
        if needed > allowed:
            raise BudgetError(name, needed, allowed)

    def with_overrides(self, **kw):
        return replace(self, **kw)


DEFAULT = Budgets()
