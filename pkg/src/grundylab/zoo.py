"""Parametric game families and the closed-form oracles known for them.

Every constructor returns a GameDef whose ``options`` implement the family's
move rule exactly; oracles are independent formulas or recursions used to
cross-check the solver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from math import isqrt

from .core import GameDef, InvalidParams, UnsupportedParams
from .grundy import mex

FAMILIES = (
    "nim",
    "moore_nim",
    "extended_nim",
    "exact_nim",
    "slow_nim",
    "subtraction",
    "euclid_cd",
    "euclid_grossman",
    "wythoff",
    "wyt_a",
    "wyt_ab",
    "mark",
    "ho_nim",
)


def _sorted_canonical(p):
    return tuple(sorted(p))


def _min_rotation(p):
    n = len(p)
    return min(tuple(p[i:] + p[:i]) for i in range(n))


# --- constructors ------------------------------------------------------------

def make_family(family: str, params: dict | None = None, *,
                use_symmetry: bool = False) -> GameDef:
    """Build a GameDef for one of the built-in families.

    ``use_symmetry`` turns on the family's canonicalization hook (pile
    sorting, or minimal rotation for cyclic heap structures) to shrink the
    reachable state space.  Off by default so enumerated nodes are the raw
    coordinate vectors.
    """
    params = dict(params or {})
    try:
        builder = _BUILDERS[family]
    except KeyError:
        raise InvalidParams(f"unknown family {family!r}") from None
    return builder(params, use_symmetry)


def _make_nim(params, use_symmetry):
    def options(p):
        out = []
        for i, x in enumerate(p):
            for v in range(x):
                out.append(p[:i] + (v,) + p[i + 1:])
        return out

    return GameDef("nim", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_subtraction(params, use_symmetry):
    xset = sorted(set(params.get("x", ())))
    if not xset or xset[0] < 1:
        raise InvalidParams("subtraction set must be nonempty positive integers")
    params["x"] = tuple(xset)

    def options(p):
        (n,) = p
        return [(n - s,) for s in xset if n - s >= 0]

    return GameDef("subtraction", params, options)


def _make_mark(params, use_symmetry):
    def options(p):
        (n,) = p
        if n == 0:
            return []
        return list({(n - 1,), (n // 2,)})

    return GameDef("mark", params, options)


def _make_euclid_cd(params, use_symmetry):
    def options(p):
        x, y = p
        out = []
        if 0 < x:
            for mult in range(1, y // x + 1):
                out.append((x, y - mult * x))
        if 0 < y:
            for mult in range(1, x // y + 1):
                out.append((x - mult * y, y))
        return out

    return GameDef("euclid_cd", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_euclid_grossman(params, use_symmetry):
    def options(p):
        x, y = p
        if x < 1 or y < 1:
            return []
        out = []
        for mult in range(1, (y - 1) // x + 1):
            out.append((x, y - mult * x))
        for mult in range(1, (x - 1) // y + 1):
            out.append((x - mult * y, y))
        return out

    return GameDef("euclid_grossman", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_wythoff(params, use_symmetry):
    def options(p):
        x, y = p
        out = []
        for v in range(x):
            out.append((v, y))
        for v in range(y):
            out.append((x, v))
        for k in range(1, min(x, y) + 1):
            out.append((x - k, y - k))
        return out

    return GameDef("wythoff", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_wyt_a(params, use_symmetry):
    a = params.get("a")
    if a is None or a < 1:
        raise InvalidParams("wyt_a requires a >= 1")

    def options(p):
        x, y = p
        out = []
        for v in range(x):
            out.append((v, y))
        for v in range(y):
            out.append((x, v))
        for k in range(1, x + 1):
            for l in range(max(1, k - a + 1), min(y, k + a - 1) + 1):
                out.append((x - k, y - l))
        return out

    return GameDef("wyt_a", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_wyt_ab(params, use_symmetry):
    a, b = params.get("a"), params.get("b")
    if a is None or b is None or a < 0 or b < 1:
        raise InvalidParams("wyt_ab requires a >= 0 and b >= 1")

    def options(p):
        x, y = p
        out = []
        # near-axis strips: min(dx,dy) < b
        for dx in range(0, min(b - 1, x) + 1):
            lo = 1 if dx == 0 else 0
            for dy in range(lo, y + 1):
                out.append((x - dx, y - dy))
        for dy in range(0, min(b - 1, y) + 1):
            lo = 1 if dy == 0 else 0
            for dx in range(max(lo, b), x + 1):
                out.append((x - dx, y - dy))
        # diagonal band: |dx-dy| < a with both deltas >= b
        for dx in range(b, x + 1):
            for dy in range(max(b, dx - a + 1), min(y, dx + a - 1) + 1):
                out.append((x - dx, y - dy))
        return out

    return GameDef("wyt_ab", params, options,
                   _sorted_canonical if use_symmetry else None)


def _multi_nim_params(params):
    n, k = params.get("n"), params.get("k")
    if n is None or k is None or not 1 <= k <= n:
        raise InvalidParams("requires pile count n and 1 <= k <= n")
    return n, k


def _reductions(values):
    """All strict-or-equal coordinate reductions of a value tuple."""
    return itertools.product(*(range(v + 1) for v in values))


def _make_moore_nim(params, use_symmetry):
    n, k = _multi_nim_params(params)

    def options(p):
        out = []
        idx = [i for i in range(n) if p[i] > 0]
        for size in range(1, min(k, len(idx)) + 1):
            for subset in itertools.combinations(idx, size):
                for news in itertools.product(*(range(p[i]) for i in subset)):
                    q = list(p)
                    for i, v in zip(subset, news):
                        q[i] = v
                    out.append(tuple(q))
        return out

    return GameDef("moore_nim", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_extended_nim(params, use_symmetry):
    n, k = _multi_nim_params(params)
    if k >= n:
        raise InvalidParams("extended_nim requires k < n")

    def options(p):
        x0, rest = p[0], p[1:]
        out = set()
        idx = [i for i in range(n) if rest[i] > 0]
        for new0 in range(x0 + 1):
            if new0 < x0:
                out.add((new0,) + rest)  # reducing only the extra pile
            for size in range(1, min(k, len(idx)) + 1):
                for subset in itertools.combinations(idx, size):
                    for news in itertools.product(*(range(rest[i]) for i in subset)):
                        q = list(rest)
                        for i, v in zip(subset, news):
                            q[i] = v
                        out.add((new0,) + tuple(q))
        return list(out)

    canonical = (lambda p: (p[0],) + tuple(sorted(p[1:]))) if use_symmetry else None
    return GameDef("extended_nim", params, options, canonical)


def _make_exact_nim(params, use_symmetry):
    n, k = _multi_nim_params(params)

    def options(p):
        idx = [i for i in range(n) if p[i] > 0]
        if len(idx) < k:
            return []
        out = []
        for subset in itertools.combinations(idx, k):
            for news in itertools.product(*(range(p[i]) for i in subset)):
                q = list(p)
                for i, v in zip(subset, news):
                    q[i] = v
                out.append(tuple(q))
        return out

    return GameDef("exact_nim", params, options,
                   _sorted_canonical if use_symmetry else None)


def _make_slow_nim(params, use_symmetry):
    n, k = _multi_nim_params(params)

    def options(p):
        idx = [i for i in range(n) if p[i] > 0]
        out = []
        for size in range(1, min(k, len(idx)) + 1):
            for subset in itertools.combinations(idx, size):
                q = list(p)
                for i in subset:
                    q[i] -= 1
                out.append(tuple(q))
        return out

    return GameDef("slow_nim", params, options,
                   _sorted_canonical if use_symmetry else None)


# hyperedges as index sets over the block-count vector
def ho_nim_hyperedges(shape: str, n: int | None = None) -> list:
    if shape == "cycle":
        if n is None or n < 3:
            raise InvalidParams("ho_nim cycle requires n >= 3")
        return [((i, (i + 1) % n)) for i in range(n)]
    if shape == "path":
        if n is None or n < 3:
            raise InvalidParams("ho_nim path requires n >= 3")
        return [(i, i + 1) for i in range(n - 1)]
    if shape == "conj2":
        return [(0, 3), (1, 3), (2, 3), (0, 1, 2)]
    if shape == "conj1":
        return [(0, 1, 4), (2, 3, 4), (0, 2, 4), (1, 3)]
    raise InvalidParams(f"unknown ho_nim shape {shape!r}")


def ho_nim_block_count(shape: str, n: int | None = None) -> int:
    if shape in ("cycle", "path"):
        return n
    return 4 if shape == "conj2" else 5


def _make_ho_nim(params, use_symmetry):
    shape = params.get("shape")
    n = params.get("n")
    edges = ho_nim_hyperedges(shape, n)
    blocks = ho_nim_block_count(shape, n)
    params["blocks"] = blocks

    def options(p):
        out = set()
        for edge in edges:
            ranges = [range(p[i] + 1) for i in edge]
            for sub in itertools.product(*ranges):
                if sum(sub) == 0:
                    continue
                q = list(p)
                for i, s in zip(edge, sub):
                    q[i] -= s
                out.add(tuple(q))
        return list(out)

    canonical = _min_rotation if (use_symmetry and shape == "cycle") else None
    return GameDef("ho_nim", params, options, canonical)


_BUILDERS = {
    "nim": _make_nim,
    "subtraction": _make_subtraction,
    "mark": _make_mark,
    "euclid_cd": _make_euclid_cd,
    "euclid_grossman": _make_euclid_grossman,
    "wythoff": _make_wythoff,
    "wyt_a": _make_wyt_a,
    "wyt_ab": _make_wyt_ab,
    "moore_nim": _make_moore_nim,
    "extended_nim": _make_extended_nim,
    "exact_nim": _make_exact_nim,
    "slow_nim": _make_slow_nim,
    "ho_nim": _make_ho_nim,
}


def box_roots(dims: int, bound: int, floor: int = 0) -> list:
    """All coordinate vectors in [floor, bound]^dims, as enumeration roots."""
    return [tuple(v) for v in itertools.product(range(floor, bound + 1),
                                                repeat=dims)]


# --- Beatty / Wythoff oracles ------------------------------------------------

def floor_phi_n(n: int) -> int:
    """floor(n * golden ratio) in exact integer arithmetic."""
    return (n + isqrt(5 * n * n)) // 2


@dataclass
class BeattyPair:
    n: int
    x: int = field(init=False)
    y: int = field(init=False)

    def __post_init__(self):
        self.x = floor_phi_n(self.n)
        self.y = self.x + self.n


def wythoff_p(n: int, convention: str = "normal") -> tuple:
    """n-th P-position pair (x <= y) of the two-pile diagonal-move game.

    The misere sequence equals the normal one except at the two smallest
    indices, where (0,0) and (1,2) are traded for (0,1) and (2,2).
    """
    pair = BeattyPair(n)
    if convention == "normal":
        return (pair.x, pair.y)
    if convention != "misere":
        raise InvalidParams(f"unknown convention {convention!r}")
    if n == 0:
        return (0, 1)
    if n == 1:
        return (2, 2)
    return (pair.x, pair.y)


def mex_b(b: int, s) -> int:
    """Gap-based excludant: with sorted s extended by -b and +infinity,
    returns s_i + b for the first gap exceeding b."""
    if b < 1:
        raise InvalidParams("mex_b requires b >= 1")
    vals = sorted(set(s))
    prev = -b
    for v in vals:
        if v - prev > b:
            return prev + b
        prev = v
    return prev + b


def _mex_sequence(start_pair, step):
    """Generate (x_n, y_n) pairs where x_n excludes all previously used
    coordinates and y_n = x_n + step(n)."""
    used = set(start_pair)
    yield start_pair
    n = 0
    while True:
        n += 1
        x = mex(used)
        y = x + step(n)
        used.add(x)
        used.add(y)
        yield (x, y)


def wyt_a_p(a: int, n: int, convention: str = "normal") -> tuple:
    """P-position pair of the a-parameter diagonal-band game by the mex
    recursion; a >= 2."""
    if a < 2:
        raise InvalidParams("wyt_a_p requires a >= 2 (a = 1 is wythoff_p)")
    return wyt_a_sequence(a, n, convention)[n]


def wyt_a_sequence(a: int, upto: int, convention: str = "normal") -> list:
    if convention == "normal":
        gen = _mex_sequence((0, 0), lambda n: a * n)
    elif convention == "misere":
        gen = _mex_sequence((0, 1), lambda n: a * n + 1)
    else:
        raise InvalidParams(f"unknown convention {convention!r}")
    return list(itertools.islice(gen, upto + 1))


def _mexb_sequence(b, start_pair, step):
    used = set(start_pair)
    yield start_pair
    n = 0
    while True:
        n += 1
        x = mex_b(b, used)
        y = x + step(n)
        used.add(x)
        used.add(y)
        yield (x, y)


def wyt_ab_sequence(a: int, b: int, upto: int,
                    convention: str = "normal") -> list:
    """P-position pairs of the two-parameter game, by the mex_b recursion."""
    if a < 0 or b < 1:
        raise InvalidParams("requires a >= 0 and b >= 1")
    if convention == "normal":
        first = (0, 0)
        gen = _mexb_sequence(b, first, lambda n: a * n)
    elif convention == "misere":
        if a == 0:
            raise UnsupportedParams("no misere recursion is known for a = 0")
        if a == 1:
            gen = _mexb_sequence(b, (b + 1, b + 1), lambda n: a * n)
        else:
            gen = _mexb_sequence(b, (0, 1), lambda n: a * n + 1)
    else:
        raise InvalidParams(f"unknown convention {convention!r}")
    return list(itertools.islice(gen, upto + 1))


def wyt_ab_p(a: int, b: int, n: int, convention: str = "normal") -> tuple:
    return wyt_ab_sequence(a, b, n, convention)[n]


# --- swap-position oracles ---------------------------------------------------

def nim_swap_oracle(x) -> tuple | None:
    """Swap label of a pile vector: all piles <= 1, parity of the ones."""
    if any(v > 1 for v in x):
        return None
    ones = sum(x)
    return (0, 1) if ones % 2 == 0 else (1, 0)


def moore_swap_oracle(n: int, k: int, x) -> tuple | None:
    """Swap label from the pile-count residue mod (k+1); piles must be <= 1."""
    if not 2 <= k < n:
        raise InvalidParams("requires 2 <= k < n")
    if len(x) != n or any(v > 1 for v in x):
        return None
    l = sum(1 for v in x if v > 0)
    if l % (k + 1) == 0:
        return (0, 1)
    if l % (k + 1) == 1:
        return (1, 0)
    return None


def euclid_swap_oracle(variant: str, x) -> tuple | None:
    """Swap label of a Euclid position, or None for non-swap positions.

    In the stay-positive variant the swap positions are exactly the
    gcd-multiples of consecutive Fibonacci pairs d*(F_j, F_{j+1}):
    dividing out the gcd is a game isomorphism, and on coprime pairs the
    move chain is the Euclidean algorithm, which has a single forced move
    precisely along the Fibonacci pairs.  The label alternates with j,
    starting from the terminal (1,1) = (F_1, F_2).
    """
    a, b = x
    if variant == "cd":
        if a == 0 or b == 0:
            return (0, 1)
        if a == b:
            return (1, 0)
        return None
    if variant == "grossman":
        d = math.gcd(a, b)
        p, q = sorted((a // d, b // d))
        f, g, j = 1, 1, 1
        while g < q:
            f, g, j = g, f + g, j + 1
        if (f, g) != (p, q):
            return None
        return (0, 1) if j % 2 == 1 else (1, 0)
    raise InvalidParams(f"unknown euclid variant {variant!r}")


def slow_swap_oracle(n: int, k: int, x) -> tuple | None:
    """Sorted-coordinate swap patterns; only defined for k >= n-1."""
    if k < n - 1:
        raise UnsupportedParams("slow-nim oracle exists only for k >= n-1")
    s = sorted(x)
    if k == n:
        if any(v != 0 for v in s[:-1]):
            return None
        return (0, 1) if s[-1] % 2 == 0 else (1, 0)
    i = s[0]
    if any(v != i for v in s[:-1]):
        return None
    return (0, 1) if (s[-1] - i) % 2 == 0 else (1, 0)


@dataclass
class CheckReport:
    ok: bool
    failures: list = field(default_factory=list)


def ferguson_check(x_set, bound: int) -> CheckReport:
    """Subtraction-game sanity battery: the min-element shift law
    (G(x) = 0 iff G(x + min X) = 1) and the value-1 escape from every
    non-terminal zero position."""
    xs = sorted(set(x_set))
    if not xs or xs[0] < 1:
        raise InvalidParams("subtraction set must be nonempty positive integers")
    k = xs[0]
    g = []
    for n in range(bound + 1):
        g.append(mex(g[n - s] for s in xs if n - s >= 0))
    failures = []
    for n in range(bound + 1 - k):
        if (g[n] == 0) != (g[n + k] == 1):
            failures.append(("shift", n, g[n], g[n + k]))
    for n in range(bound + 1):
        if g[n] == 0 and any(n - s >= 0 for s in xs):
            if not any(n - s >= 0 and g[n - s] == 1 for s in xs):
                failures.append(("escape", n, g[n], None))
    return CheckReport(not failures, failures)
