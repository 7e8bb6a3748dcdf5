"""Truncated Hilbert-space representations of the teardrop, sphere and lens algebras.

Operators act on the window ``e_0 .. e_{N-1}`` of l^2(N) and are plain complex
numpy arrays.  Shifts that would leave the window give zero, so a product of
``L`` generators is only trusted on columns ``p <= N-1-L``; every residual
below is measured there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from .ncalg import NcElement, Presentation, lens, su2, theta, wp
from .ncalg.core import Word

__all__ = [
    "KINDS",
    "RepHandle",
    "build_rep",
    "operator_of",
    "relation_residual",
    "adjoint_residual",
    "interleaver",
    "interleaver_check",
    "faithfulness_probe",
    "truncated_trace",
    "spectrum_of_a",
    "decay_ratios",
    "closed_form_coefficient",
    "FredholmModule",
    "fredholm_module",
    "projection_approx",
    "projector",
    "projection_distances",
    "index_pairing_numeric",
    "spectral_indicator_pairing",
    "index_pairing_report",
]

KINDS = ("wp_pi_s", "wp_pi_0", "su2_pi", "lens_pi_s_lambda", "lens_pi_0_lambda")

TOL = 1e-12


def _as_q(q) -> Fraction:
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")
    return q


@dataclass(frozen=True)
class RepHandle:
    """A truncated *-representation: generator matrices plus the data that built them."""

    kind: str
    presentation: Presentation
    q: Fraction
    N: int
    params: Dict[str, object]
    generators: Dict[str, np.ndarray]
    _words: Dict[Word, np.ndarray] = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return next(iter(self.generators.values())).shape[0]

    @property
    def infinite(self) -> bool:
        return self.kind in ("wp_pi_s", "su2_pi", "lens_pi_s_lambda")

    def word_matrix(self, word: Word) -> np.ndarray:
        hit = self._words.get(word)
        if hit is not None:
            return hit
        if not word:
            m = np.eye(self.dim, dtype=complex)
        else:
            m = self.word_matrix(word[:-1]) @ self.generators[word[-1]]
        self._words[word] = m
        return m


def _lower(diag_coeffs: np.ndarray) -> np.ndarray:
    """Matrix sending ``e_p`` to ``coeffs[p] * e_{p-1}``; ``e_0`` goes to zero."""
    n = len(diag_coeffs)
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n - 1), np.arange(1, n)] = diag_coeffs[1:]
    return m


def _with_star(pres: Presentation, gens: Dict[str, np.ndarray]) -> Dict[str, np.ndarray]:
    out = dict(gens)
    for g, m in gens.items():
        out[pres.star[g]] = m.conj().T
    return out


def build_rep(
    kind: str,
    *,
    k: int = 1,
    l: int = 1,
    s: int = 1,
    lam: complex = 1,
    q=Fraction(1, 2),
    N: int = 64,
) -> RepHandle:
    """Build one of the representations listed in ``KINDS``.

    ``wp_pi_s``: ``a e_p = q^{2(lp+s)} e_p``,
    ``b e_p = q^{k(lp+s)} prod_{r=1}^l (1-q^{2(lp+s-r)})^{1/2} e_{p-1}``.
    ``su2_pi``: ``alpha e_n = (1-q^{2n})^{1/2} e_{n-1}``, ``beta e_n = q^{n+1} e_n``.
    ``lens_pi_s_lambda``: ``c e_p = prod_{m=1}^l (1-q^{2(pl+s-m)})^{1/2} e_{p-1}``,
    ``d e_p = lam q^{pl+s} e_p``.
    The ``*_0`` kinds are the one-dimensional representations.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown representation kind {kind!r}; expected one of {KINDS}")
    q = _as_q(q)
    qf = float(q)
    if kind in ("wp_pi_s", "lens_pi_s_lambda", "su2_pi"):
        if N < 2 * l + 2:
            raise ValueError(f"N must be at least 2l+2 = {2 * l + 2}")
    if kind in ("wp_pi_s", "lens_pi_s_lambda") and not 1 <= s <= l:
        raise ValueError(f"s must lie in 1..{l}, got {s}")
    if kind.startswith("lens") and abs(abs(complex(lam)) - 1) > TOL:
        raise ValueError(f"|lambda| must be 1, got {abs(complex(lam))}")
    p = np.arange(N)

    if kind == "wp_pi_s":
        pres = wp(k, l)
        n = l * p + s
        prod = np.ones(N)
        for r in range(1, l + 1):
            prod *= np.sqrt(np.clip(1 - qf ** (2.0 * (n - r)), 0, None))
        gens = {"a": np.diag(qf ** (2.0 * n)).astype(complex),
                "b": _lower(qf ** (k * n.astype(float)) * prod)}
        params = {"k": k, "l": l, "s": s}
    elif kind == "wp_pi_0":
        pres = wp(k, l)
        gens = {"a": np.zeros((1, 1), complex), "b": np.zeros((1, 1), complex)}
        params = {"k": k, "l": l}
    elif kind == "su2_pi":
        pres = su2(k, l)
        gens = {"alpha": _lower(np.sqrt(1 - qf ** (2.0 * p))),
                "beta": np.diag(qf ** (p + 1.0)).astype(complex)}
        params = {"k": k, "l": l}
    elif kind == "lens_pi_s_lambda":
        pres = lens(l)
        n = l * p + s
        prod = np.ones(N)
        for m in range(1, l + 1):
            prod *= np.sqrt(np.clip(1 - qf ** (2.0 * (n - m)), 0, None))
        gens = {"c": _lower(prod), "d": np.diag(complex(lam) * qf ** n.astype(float))}
        params = {"l": l, "s": s, "lam": complex(lam)}
    else:
        pres = lens(l)
        gens = {"c": np.full((1, 1), complex(lam)), "d": np.zeros((1, 1), complex)}
        params = {"l": l, "lam": complex(lam)}
    gens = _with_star(pres, gens)
    dim = N if kind in ("wp_pi_s", "su2_pi", "lens_pi_s_lambda") else 1
    return RepHandle(kind, pres, q, dim, params, gens)


def _coeff(c, q: Fraction) -> complex:
    return complex(float(c.eval(q)))


def operator_of(x: NcElement, r: RepHandle) -> np.ndarray:
    """Matrix of ``x`` in the representation ``r`` (homomorphic extension)."""
    if x.presentation != r.presentation:
        raise ValueError(f"element of {x.presentation.name} cannot act in a {r.presentation.name} representation")
    out = np.zeros((r.dim, r.dim), dtype=complex)
    for w, c in x.terms.items():
        out += _coeff(c, r.q) * r.word_matrix(w)
    return out


def _interior(r: RepHandle, L: int) -> int:
    """Number of trusted columns for words of length ``<= L``."""
    return r.dim - L if r.infinite else r.dim


def relation_residual(r: RepHandle) -> float:
    """Largest entry of ``pi(lhs) - pi(rhs)`` over all defining relations, on interior columns."""
    pres = r.presentation
    worst = 0.0
    for lhs, rhs in pres.rules.items():
        L = max([len(lhs)] + [len(w) for w in rhs])
        m = r.word_matrix(lhs).copy()
        for w, c in rhs.items():
            m -= _coeff(c, r.q) * r.word_matrix(w)
        cols = _interior(r, L)
        if cols > 0:
            worst = max(worst, float(np.abs(m[:, :cols]).max()))
    return worst


def adjoint_residual(x: NcElement, r: RepHandle) -> float:
    """``pi(x*)`` against the conjugate transpose of ``pi(x)`` on interior rows and columns."""
    L = max(x.max_length(), 0)
    cut = _interior(r, 2 * L)
    if cut <= 0:
        raise ValueError("window too small for this element")
    a = operator_of(x.star(), r)[:cut, :cut]
    b = operator_of(x, r).conj().T[:cut, :cut]
    return float(np.abs(a - b).max()) if cut else 0.0


def interleaver(l: int, N: int) -> np.ndarray:
    """Permutation matrix of ``e_p^s -> e_{lp+s-1}``.

    The source is ``V_1 + ... + V_l`` with ``N/l`` basis vectors each, stacked
    block by block.
    """
    if N % l:
        raise ValueError("N must be divisible by l")
    M = N // l
    phi = np.zeros((N, N))
    for s in range(1, l + 1):
        for p in range(M):
            phi[l * p + s - 1, (s - 1) * M + p] = 1
    return phi


INTERLEAVER_TESTS = ("1", "a", "b", "bS", "a*b", "a^2*bS")


def interleaver_check(k: int, l: int, q=Fraction(1, 2), N: int = 64,
                      elements: Optional[Sequence] = None) -> float:
    """Max residual of ``pi(theta(x)) phi - phi (sum_s pi_s)(x)`` on interior indices."""
    from .ncalg import parse_element

    if N % l:
        raise ValueError("N must be divisible by l")
    M = N // l
    W = wp(k, l)
    emb = theta(k, l)
    big = build_rep("su2_pi", k=k, l=l, q=q, N=N)
    blocks = [build_rep("wp_pi_s", k=k, l=l, s=s, q=q, N=M) for s in range(1, l + 1)]
    phi = interleaver(l, N)
    worst = 0.0
    for x in elements if elements is not None else INTERLEAVER_TESTS:
        x = parse_element(W, x) if isinstance(x, str) else x
        L = x.max_length()
        direct = np.zeros((N, N), dtype=complex)
        for s, rep in enumerate(blocks):
            direct[s * M:(s + 1) * M, s * M:(s + 1) * M] = operator_of(x, rep)
        res = operator_of(emb(x), big) @ phi - phi @ direct
        cols = [(s - 1) * M + p for s in range(1, l + 1) for p in range(M - L)]
        worst = max(worst, float(np.abs(res[:, cols]).max()))
    return worst


def faithfulness_probe(x: NcElement, s: int = 1, N: int = 256, q=Fraction(1, 2)) -> float:
    """Spectral norm of ``pi_s(x)`` restricted to the interior columns.

    Truncation only removes columns, so this is a lower bound on the norm
    of the untruncated operator.
    """
    if x.is_zero():
        raise ValueError("the zero element has norm zero")
    k, l = x.presentation.params["k"], x.presentation.params["l"]
    r = build_rep("wp_pi_s", k=k, l=l, s=s, q=q, N=N)
    cols = _interior(r, x.max_length())
    return float(np.linalg.norm(operator_of(x, r)[:, :cols], 2))


def truncated_trace(x: NcElement, s: int = 1, N: int = 256, q=Fraction(1, 2)) -> float:
    """Partial trace of ``pi_s(x)`` over the window; the identity part must vanish."""
    if not x.constant_term().is_zero():
        raise ValueError("x has a nonzero constant term; the identity is not trace class")
    k, l = x.presentation.params["k"], x.presentation.params["l"]
    r = build_rep("wp_pi_s", k=k, l=l, s=s, q=q, N=N)
    return float(np.trace(operator_of(x, r)).real)


def spectrum_of_a(r: RepHandle) -> np.ndarray:
    """Eigenvalues of ``pi_s(a)`` in decreasing order."""
    return np.sort(np.linalg.eigvalsh(r.generators["a"]))[::-1]


def decay_ratios(r: RepHandle, p_range: Iterable[int]) -> Dict[str, np.ndarray]:
    """Successive ratios of the diagonal of ``pi_s(a)`` and the subdiagonal of ``pi_s(b)``."""
    diag = np.diag(r.generators["a"]).real
    sub = np.diag(r.generators["b"], 1).real
    ps = np.array(list(p_range))
    return {"a": diag[ps + 1] / diag[ps], "b": sub[ps + 1] / sub[ps]}


def closed_form_coefficient(k: int, l: int, s: int, m: int, n: int, p: int, q=Fraction(1, 2)) -> float:
    """Matrix coefficient of ``pi_s(a^m b^n)`` from ``e_p`` to ``e_{p-n}``, built factor by factor.

    ``b^n`` contributes ``prod_{i<n} q^{k(l(p-i)+s)}`` times the square roots,
    which is ``q^{nk[lp - l(n-1)/2 + s]}`` for the power of q.
    """
    if p < n:
        return 0.0
    qf = float(_as_q(q))
    expo = n * k * (l * p - l * (n - 1) / 2 + s) + 2 * m * (l * (p - n) + s)
    roots = 1.0
    for r_ in range(1, l * n + 1):
        roots *= math.sqrt(1 - qf ** (2 * (l * p + s - r_)))
    return qf ** expo * roots


@dataclass
class FredholmModule:
    """``(V_s + V_0, pi_s + pi, F, gamma)`` truncated to ``N + N`` dimensions."""

    pi_s: RepHandle
    F: np.ndarray
    gamma: np.ndarray

    def pi_bar(self, x: NcElement) -> np.ndarray:
        N = self.pi_s.dim
        out = np.zeros((2 * N, 2 * N), dtype=complex)
        out[:N, :N] = operator_of(x, self.pi_s)
        # the infinite sum of one-dimensional pi_0 only sees the constant term
        out[N:, N:] = _coeff(x.constant_term(), self.pi_s.q) * np.eye(N)
        return out

    def axioms(self) -> Dict[str, float]:
        F, g = self.F, self.gamma
        I = np.eye(F.shape[0])
        return {
            "F_selfadjoint": float(np.abs(F - F.conj().T).max()),
            "F_squared": float(np.abs(F @ F - I).max()),
            "gamma_squared": float(np.abs(g @ g - I).max()),
            "anticommute": float(np.abs(F @ g + g @ F).max()),
        }

    def commutator(self, x: NcElement) -> np.ndarray:
        P = self.pi_bar(x)
        return self.F @ P - P @ self.F

    def character(self, x: NcElement) -> float:
        """``Tr(gamma pi_bar(x))`` over the window."""
        return float(np.trace(self.gamma @ self.pi_bar(x)).real)


def fredholm_module(k: int, l: int, s: int, N: int = 128, q=Fraction(1, 2)) -> FredholmModule:
    r = build_rep("wp_pi_s", k=k, l=l, s=s, q=q, N=N)
    I, Z = np.eye(N), np.zeros((N, N))
    F = np.block([[Z, I], [I, Z]]).astype(complex)
    gamma = np.block([[I, Z], [Z, -I]]).astype(complex)
    return FredholmModule(r, F, gamma)


# -- spectral projections --------------------------------------------------

def _printed_factor(x: np.ndarray, p: int, s: int, l: int, n_terms: int, qf: float) -> np.ndarray:
    """``q^{-2ns} prod_{r=0, r!=p}^n (x - q^{2(lr+s)}) / (q^{2lp} - q^{2lr})`` evaluated on ``x``.

    The prefactor is spread over the factors to keep intermediate values in range.
    """
    out = np.ones_like(x)
    for r_ in range(n_terms + 1):
        if r_ == p:
            continue
        out = out * (x * qf ** (-2 * s) - qf ** (2 * l * r_)) / (qf ** (2 * l * p) - qf ** (2 * l * r_))
    return out


def projection_approx(p: int, s: int, l: int = 1, N: int = 64, n_terms: int = 10,
                      q=Fraction(1, 2), k: int = 1, t: Optional[int] = None) -> np.ndarray:
    """The ``n_terms``-th product approximant of ``P_p^s``, acting in ``pi_t`` (default ``t = s``).

    ``n_terms = 0`` is the empty product, the identity.
    """
    if n_terms >= N / l:
        raise ValueError("n_terms must be smaller than N/l")
    t = s if t is None else t
    r = build_rep("wp_pi_s", k=k, l=l, s=t, q=q, N=N)
    lam = np.diag(r.generators["a"]).real
    return np.diag(_printed_factor(lam, p, s, l, n_terms, float(r.q))).astype(complex)


def projector(p: int, N: int) -> np.ndarray:
    P = np.zeros((N, N), dtype=complex)
    P[p, p] = 1
    return P


def projection_distances(p: int, s: int, l: int, N: int, n_values: Iterable[int],
                         q=Fraction(1, 2)) -> List[float]:
    """Operator-norm distance from each approximant to the exact rank-one projector."""
    target = projector(p, N)
    return [float(np.linalg.norm(projection_approx(p, s, l, N, n, q) - target, 2)) for n in n_values]


def index_pairing_numeric(s: int, t: int, l: int, N: int = 256, n_terms: int = 20,
                          q=Fraction(1, 2)) -> float:
    """``tau_s`` of the printed approximant of ``P_0^t``: ``Tr pi_s(f(a)) - f(0) Tr 1``.

    The constant part of the polynomial ``f`` is removed the way ``tau_s`` does,
    by subtracting its value in the one-dimensional representation.
    """
    qf = float(_as_q(q))
    r = build_rep("wp_pi_s", l=l, s=s, q=q, N=N)
    lam = np.diag(r.generators["a"]).real
    vals = _printed_factor(lam, 0, t, l, n_terms, qf)
    f0 = _printed_factor(np.zeros(1), 0, t, l, n_terms, qf)[0]
    return float(np.sum(vals - f0))


def spectral_indicator_pairing(s: int, t: int, l: int, N: int = 256, q=Fraction(1, 2),
                               rtol: float = 1e-9) -> float:
    """``tau_s(f_{0,t}(a))`` for the indicator ``f_{0,t}`` of the eigenvalue ``q^{2t}``.

    Functional calculus on the diagonalised ``pi_s(a)``; ``f(0) = 0`` so the
    trace is the whole character.
    """
    qf = float(_as_q(q))
    r = build_rep("wp_pi_s", l=l, s=s, q=q, N=N)
    evals, vecs = np.linalg.eigh(r.generators["a"])
    target = qf ** (2 * t)
    f = np.where(np.abs(evals - target) <= rtol * target, 1.0, 0.0)
    P = (vecs * f) @ vecs.conj().T
    return float(np.trace(P).real)


def index_pairing_report(l: int, N: int = 256, n_terms: int = 40, q=Fraction(1, 2),
                         tol: float = 1e-8) -> dict:
    """Pair every ``tau_s`` with every ``P_0^t``.

    The printed approximant is tried first.  Where it does not land within
    ``tol`` of ``delta_{s,t}`` the spectral indicator is used instead and the
    entry is flagged.
    """
    rows = []
    for s in range(1, l + 1):
        for t in range(1, l + 1):
            expected = 1.0 if s == t else 0.0
            printed = index_pairing_numeric(s, t, l, N, n_terms, q)
            printed_ok = math.isfinite(printed) and abs(printed - expected) <= tol
            row = {"s": s, "t": t, "expected": expected, "printed": printed,
                   "printed_converged": printed_ok, "fallback": None, "value": printed}
            if not printed_ok:
                fb = spectral_indicator_pairing(s, t, l, N, q)
                row["fallback"] = fb
                row["value"] = fb
            row["pass"] = abs(row["value"] - expected) <= tol
            rows.append(row)
    return {
        "l": l, "N": N, "n_terms": n_terms, "q": str(q),
        "rows": rows,
        "discrepancy": any(not r_["printed_converged"] for r_ in rows),
        "pass": all(r_["pass"] for r_ in rows),
    }
