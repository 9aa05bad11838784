"""Window functions and the three weight transforms f, g, h attached to a
smooth compactly supported window, each evaluated by independent
representations (Bessel-kernel integrals vs hypergeometric reductions vs
closed forms) so the identity suite can cross-validate them.

The cosine transform of a window is precomputed once on a fine FFT grid and
interpolated; a QUADPACK oscillatory quadrature serves as the independent
second route.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate
from scipy import special as sp

from .specfun import (ConvergenceError, DomainError, PoleError, _lg, k0_grid,
                      gamma_ratio)

SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class WindowSpec:
    """Smooth test function: kind in {bump, transition, gaussian}.

    bump/transition live on [a1, a2]; a transition window ramps up on
    [a1, 2 a1], is 1 on [2 a1, a2 - 2 a1] and ramps down on [a2 - 2 a1, a2]
    (so a1 plays the role of T/2 and a2 of X). A gaussian window is
    exp(-((x - X)/T)^2), not compactly supported, and only valid for the
    smoothed-sum operations.
    """

    kind: str
    a1: float = 0.0
    a2: float = 0.0
    X: float = 0.0
    T: float = 0.0
    shape: float = 1.0

    def __post_init__(self):
        if self.kind in ("bump", "transition"):
            if not (0 < self.a1 < self.a2):
                raise DomainError("window requires 0 < a1 < a2")
            if self.kind == "transition" and self.a2 <= 4 * self.a1:
                raise DomainError("transition window requires a2 > 4 a1")
        elif self.kind == "gaussian":
            if self.X <= 0 or self.T <= 0:
                raise DomainError("gaussian window requires X, T > 0")
        else:
            raise DomainError(f"unknown window kind {self.kind!r}")

    @property
    def compact(self) -> bool:
        return self.kind != "gaussian"


def parse_window(spec: str) -> WindowSpec:
    """Mini-grammar: 'bump:a1,a2[,shape]', 'transition:a1,a2[,shape]',
    'gaussian:X,T'."""
    kind, _, rest = spec.partition(":")
    parts = [float(t) for t in rest.split(",") if t]
    if kind == "gaussian":
        if len(parts) != 2:
            raise DomainError("gaussian window takes X,T")
        return WindowSpec("gaussian", X=parts[0], T=parts[1])
    if kind in ("bump", "transition"):
        if len(parts) not in (2, 3):
            raise DomainError(f"{kind} window takes a1,a2[,shape]")
        shape = parts[2] if len(parts) == 3 else 1.0
        return WindowSpec(kind, a1=parts[0], a2=parts[1], shape=shape)
    raise DomainError(f"unknown window kind {kind!r}")


def _ramp(u, shape):
    """C-infinity step: 0 for u <= 0, 1 for u >= 1."""
    u = np.asarray(u, dtype=np.float64)
    lo = u <= 0
    hi = u >= 1
    mid = ~(lo | hi)
    out = np.zeros_like(u)
    out[hi] = 1.0
    um = u[mid]
    sa = np.exp(-shape / um)
    sb = np.exp(-shape / (1.0 - um))
    out[mid] = sa / (sa + sb)
    return out


def window_eval(w: WindowSpec, x) -> np.ndarray | float:
    """Evaluate the window; exactly 0 outside the support of compact kinds."""
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if w.kind == "bump":
        t = (2 * x - (w.a1 + w.a2)) / (w.a2 - w.a1)
        out = np.zeros_like(x)
        inside = np.abs(t) < 1.0
        out[inside] = np.exp(-w.shape / (1.0 - t[inside] ** 2))
        # exp(-shape) at midpoint, no renormalization
    elif w.kind == "transition":
        up = _ramp((x - w.a1) / w.a1, w.shape)
        down = _ramp((w.a2 - x) / (2 * w.a1), w.shape)
        out = up * down
    else:
        out = np.exp(-(((x - w.X) / w.T) ** 2))
    return float(out[0]) if scalar else out


def window_moment0(w: WindowSpec) -> float:
    """integral_0^inf of the window, absolute error <= 1e-10."""
    if w.kind == "gaussian":
        return SQRT_PI * w.T / 2.0 * (1.0 + math.erf(w.X / w.T))
    val, err = integrate.quad(lambda y: window_eval(w, y), w.a1, w.a2,
                              epsabs=1e-13, epsrel=1e-13, limit=200)
    if err > 1e-10:
        raise ConvergenceError("window moment quadrature above tolerance")
    return val


def window_moment(w: WindowSpec, k: int) -> float:
    """integral of y^k w(y) dy over the support (compact windows)."""
    val, _ = integrate.quad(lambda y: window_eval(w, y) * y**k, w.a1, w.a2,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
    return val


# ---------------------------------------------------------------------------
# Cosine transform C(xi) = int w(y) cos(xi y) dy, FFT grid + spline
# ---------------------------------------------------------------------------

class WindowTransform:
    """Precomputed cosine transform of a compact window on a fine xi-grid."""

    DXI = 0.002

    def __init__(self, w: WindowSpec, xi_max: float = 800.0):
        if not w.compact:
            raise DomainError("cosine transform requires a compact window")
        self.w = w
        self._build(xi_max)

    def _build(self, xi_max: float):
        w = self.w
        margin = max(300.0, 0.4 * xi_max)
        nyq = 2.0 * (xi_max + margin)
        dy = 2 * math.pi / nyq
        nfft = int(2 ** math.ceil(math.log2(2 * math.pi / (self.DXI * dy))))
        y = np.arange(0, w.a2 + dy, dy)
        samples = window_eval(w, y)
        spec = np.fft.rfft(samples, n=nfft) * dy
        dxi = 2 * math.pi / (nfft * dy)
        ngrid = int(xi_max / dxi) + 2
        self.xi_grid = dxi * np.arange(ngrid)
        self.c_grid = spec.real[:ngrid]
        from scipy.interpolate import CubicSpline
        self._spline = CubicSpline(self.xi_grid, self.c_grid)
        self.xi_max = float(self.xi_grid[-1])
        self.scale = float(np.abs(self.c_grid).max())
        # decade-wise envelope of |C| for truncation decisions
        edges = np.geomspace(1.0, self.xi_max, 64)
        env = []
        for i in range(len(edges) - 1):
            sel = (self.xi_grid >= edges[i]) & (self.xi_grid < edges[i + 1])
            env.append(np.abs(self.c_grid[sel]).max() if sel.any() else 0.0)
        env = np.maximum.accumulate(np.array(env)[::-1])[::-1]
        self._env_edges = edges[:-1]
        self._env = env
        if env[-1] > 1e-12 * self.scale:
            if xi_max < 5000.0:
                self._build(xi_max * 2.0)

    def ensure(self, xi_needed: float):
        if xi_needed > self.xi_max:
            self._build(2.0 ** math.ceil(math.log2(xi_needed)))

    def cos_transform(self, xi) -> np.ndarray | float:
        """Spline-interpolated C(xi); 0 beyond the resolved decay range."""
        scalar = np.ndim(xi) == 0
        xi = np.atleast_1d(np.asarray(xi, dtype=np.float64))
        out = np.zeros_like(xi)
        inside = xi <= self.xi_max
        out[inside] = self._spline(xi[inside])
        return float(out[0]) if scalar else out

    def cos_transform_direct(self, xi: float) -> tuple[float, float]:
        """Oscillatory QUADPACK quadrature of int w(y) cos(xi y) dy.

        Independent of the FFT/spline route; used as its oracle.
        """
        w = self.w
        if xi == 0:
            return window_moment0(w), 1e-12
        val, err = integrate.quad(lambda y: window_eval(w, y), w.a1, w.a2,
                                  weight="cos", wvar=xi,
                                  epsabs=1e-12, epsrel=1e-12, limit=400)
        return val, err

    def envelope(self, xi: float) -> float:
        """Monotone upper envelope of |C| from xi onward."""
        if xi >= self.xi_max:
            return 1e-12 * self.scale
        i = np.searchsorted(self._env_edges, xi) - 1
        return float(self._env[max(i, 0)])

    def xi_cutoff(self, re_s: float, tol: float) -> float:
        """Smallest xi beyond which |C(xi)| (xi/2)^Re s stays below tol."""
        weights = self._env * np.maximum(self._env_edges / 2.0, 1.0) ** re_s
        below = weights < tol
        idx = len(below) - 1
        while idx > 0 and below[idx - 1]:
            idx -= 1
        return float(self._env_edges[min(idx, len(self._env_edges) - 1)])


_transforms: dict[WindowSpec, WindowTransform] = {}


def get_transform(w: WindowSpec) -> WindowTransform:
    if w not in _transforms:
        _transforms[w] = WindowTransform(w)
    return _transforms[w]


# ---------------------------------------------------------------------------
# f weight
# ---------------------------------------------------------------------------

def f_weight(w: WindowSpec, s: complex, l: int, x, method: str = "auto"):
    """f(w; s; x) = (2/sqrt(pi)) (x/4l)^s int w(y) cos(x y / 2l) dy.

    'quad' uses the oscillatory QUADPACK rule per point; 'spline' the FFT
    grid. 'auto' picks spline for arrays, quad for scalars.
    """
    if not w.compact:
        raise DomainError("f_weight requires a compactly supported window")
    s = complex(s)
    tr = get_transform(w)
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if np.any(xs <= 0):
        raise DomainError("f_weight requires x > 0")
    if method == "auto":
        method = "quad" if scalar else "spline"
    if method == "quad":
        cvals = np.array([tr.cos_transform_direct(xi)[0] for xi in xs / (2 * l)])
    elif method == "spline":
        tr.ensure(float(xs.max()) / (2 * l))
        cvals = tr.cos_transform(xs / (2 * l))
    else:
        raise DomainError(f"unknown f_weight method {method!r}")
    pref = 2.0 / SQRT_PI * np.exp(s * np.log(xs / (4.0 * l)))
    out = pref * cvals
    return complex(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# quadrature helpers (vectorized integrands)
# ---------------------------------------------------------------------------

def _simpson_doubling(fvec, a: float, b: float, n0: int, tol: float,
                      max_doublings: int = 8):
    """Composite Simpson with interval doubling until |change| <= tol."""
    n = max(8, n0)
    n += n % 2
    prev = None
    for _ in range(max_doublings + 1):
        x = np.linspace(a, b, n + 1)
        y = fvec(x)
        val = integrate.simpson(y, x=x)
        if prev is not None and abs(val - prev) <= tol:
            return val, abs(val - prev)
        prev = val
        n *= 2
    return prev, abs(val - prev) if prev is not None else math.inf


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _gl_panels(fvec, a: float, b: float, panels: int):
    edges = np.linspace(a, b, panels + 1)
    mid = (edges[1:] + edges[:-1]) / 2
    half = (edges[1:] - edges[:-1]) / 2
    x = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    y = fvec(x).reshape(panels, -1)
    return ((y * _GL_WEIGHTS[None, :]).sum(axis=1) * half).sum()


def _gl_doubling(fvec, a: float, b: float, tol: float, freq: float = 1.0,
                 max_doublings: int = 9):
    """Composite 16-point Gauss-Legendre with panel doubling."""
    panels = max(4, int(abs(freq) * (b - a) / (2 * math.pi)) + 4)
    prev = None
    for _ in range(max_doublings + 1):
        val = _gl_panels(fvec, a, b, panels)
        if prev is not None and abs(val - prev) <= tol:
            return val, abs(val - prev)
        prev = val
        panels *= 2
    return prev, abs(val - prev)


# ---------------------------------------------------------------------------
# g weight
# ---------------------------------------------------------------------------

def _g_integral(w: WindowSpec, s: complex, l: int, k: int, tol: float = 1e-8):
    """g = pi (-1)^k int J_{2k-1}(x) f(w;s;x) / x dx on a truncated range."""
    tr = get_transform(w)
    xi_cut = tr.xi_cutoff(s.real, 1e-13 * max(tr.scale, 1.0))
    x_max = min(2 * l * xi_cut, 2 * l * tr.xi_max)
    freq = 1.0 + w.a2 / (2 * l)

    def integrand(x):
        c = tr.cos_transform(x / (2 * l))
        xs = np.exp((s - 1) * np.log(x))
        return sp.jv(2 * k - 1, x) * xs * c

    if abs(s.imag) < 1e-12:
        val, qerr = _simpson_doubling(lambda x: integrand(x).real,
                                      1e-9, x_max, int(freq * x_max / 2), tol / 10)
        val = complex(val)
    else:
        vr, er = _simpson_doubling(lambda x: integrand(x).real,
                                   1e-9, x_max, int(freq * x_max / 2), tol / 10)
        vi, ei = _simpson_doubling(lambda x: integrand(x).imag,
                                   1e-9, x_max, int(freq * x_max / 2), tol / 10)
        val, qerr = complex(vr, vi), er + ei
    del qerr
    return math.pi * (-1) ** k * (2.0 / SQRT_PI) * np.exp(-s * math.log(4.0 * l)) * val


def _g_hyper(w: WindowSpec, s: complex, l: int, k: int, tol: float = 1e-9):
    """Lemma-form g = g1 + g2 via Gauss 2F1 under the window integral."""
    from .specfun import hyp2f1
    s = complex(s)
    if not (1 - 2 * k < s.real < 1.5):
        raise DomainError("hypergeometric g requires 1-2k < Re s < 3/2")
    g1 = 0j
    lo = max(w.a1, 2.0 * l)
    if w.a2 > 2 * l:
        gfac = gamma_ratio([k + s / 2 - 0.5, k + s / 2], [2 * k])

        def f1(x):
            z = 4.0 * l * l / (x * x)
            F = np.array([hyp2f1(k + s / 2 - 0.5, k + s / 2, 2 * k, zz).value
                          for zz in z])
            return window_eval(w, x) * np.exp((1 - 2 * k - s) * np.log(x)) * F

        def f1r(x):
            return f1(x).real

        def f1i(x):
            return f1(x).imag

        vr, _ = _gl_doubling(f1r, lo, w.a2, tol, freq=0.5)
        vi, _ = _gl_doubling(f1i, lo, w.a2, tol, freq=0.5)
        g1 = (2 * l) ** (2 * k - 1) * cmath.sin(math.pi * s / 2) * gfac * complex(vr, vi)
    g2 = 0j
    hi = min(w.a2, 2.0 * l)
    if w.a1 < 2 * l:
        gfac2 = gamma_ratio([k + s / 2 - 0.5, 0.5 + s / 2 - k], [0.5])

        def f2(x):
            z = x * x / (4.0 * l * l)
            F = np.array([hyp2f1(k + s / 2 - 0.5, 0.5 + s / 2 - k, 0.5, zz).value
                          for zz in z])
            return window_eval(w, x) * F

        vr, _ = _gl_doubling(lambda x: f2(x).real, w.a1, hi, tol, freq=2 * k)
        vi, _ = _gl_doubling(lambda x: f2(x).imag, w.a1, hi, tol, freq=2 * k)
        g2 = np.exp(-s * math.log(2.0 * l)) * cmath.cos(math.pi * s / 2) * gfac2 * complex(vr, vi)
    return g1 + g2


def g_weight(w: WindowSpec, s: complex, l: int, k: int,
             method: str = "hypergeometric") -> complex:
    """Holomorphic-spectrum weight g(w; s; k), k >= 6.

    Methods: 'integral' (Bessel-transform definition) and 'hypergeometric'
    (the analytic continuation as window integrals of 2F1); they agree to
    1e-6 on the overlap domain.
    """
    if k < 6:
        raise DomainError("g_weight requires k >= 6")
    if not w.compact:
        raise DomainError("g_weight requires a compact window")
    s = complex(s)
    if method == "integral":
        return complex(_g_integral(w, s, l, k))
    if method == "hypergeometric":
        return complex(_g_hyper(w, s, l, k))
    raise DomainError(f"unknown g_weight method {method!r}")


def g_closed_s1(w: WindowSpec, k: int) -> complex:
    """Closed form at s=1, l=1:
    sqrt(pi) int_2^inf w(x)/sqrt(x^2-4) (2/(x+sqrt(x^2-4)))^{2k-1} dx."""
    lo = max(w.a1, 2.0)

    def f(x):
        root = np.sqrt(x * x - 4.0)
        return window_eval(w, x) / root * np.exp((2 * k - 1) * (math.log(2) * 2 - np.log(x + root)))

    val, _ = _gl_doubling(lambda x: f(x), lo, w.a2, 1e-11, freq=1.0)
    return complex(SQRT_PI * val)


# ---------------------------------------------------------------------------
# h weight
# ---------------------------------------------------------------------------

def _h_head(w: WindowSpec, s: complex, l: int, r: float, delta: float = 0.25,
            mmax: int = 9, jmax: int = 11):
    """Analytic [0, delta] head of the k0 integral via closed-form moments.

    Uses the power series of both J_{2ir} factors and the Taylor expansion of
    the window cosine transform; each term integrates to
    delta^(A+-2ir)/(A+-2ir).
    """
    gam = np.array([(-1) ** j * window_moment(w, 2 * j)
                    / math.factorial(2 * j) / (2.0 * l) ** (2 * j)
                    for j in range(jmax)])
    total = 0j
    if abs(r) >= 1e-3:
        pref = 1j / (2 * math.sinh(math.pi * r))
        for m in range(mmax):
            wp = cmath.exp(-_lg(m + 1 + 2j * r)) / math.factorial(m)
            wm = cmath.exp(-_lg(m + 1 - 2j * r)) / math.factorial(m)
            for j in range(jmax):
                A = s + 2 * m + 2 * j
                tp = 2.0 ** (-2 * m) * gam[j] * (
                    2.0 ** (-2j * r) * delta ** (A + 2j * r) / (A + 2j * r) * wp
                    - 2.0 ** (2j * r) * delta ** (A - 2j * r) / (A - 2j * r) * wm)
                total += (-1) ** m * tp
        total *= pref
    else:
        # removable r -> 0 limit: -(2/pi) dF/dzeta at zeta = 0
        for m in range(mmax):
            psi_m = float(sp.digamma(m + 1))
            for j in range(jmax):
                A = s + 2 * m + 2 * j
                F0 = delta**A / (A * math.factorial(m) ** 2)
                dF = F0 * (math.log(delta / 2.0) - 1.0 / A - psi_m)
                total += (-1) ** m * 2.0 ** (-2 * m) * gam[j] * (-2.0 / math.pi) * dF
    return total


def _h_integral(w: WindowSpec, s: complex, l: int, r: float, tol: float = 1e-8):
    """h = pi int k0(x, ir) f(w;s;x)/x dx = 2 sqrt(pi) (4l)^-s
    int x^(s-1) k0(x, ir) C(x/2l) dx, head + log-grid + linear-grid."""
    if s.real <= 0:
        raise DomainError("integral h requires Re s > 0")
    tr = get_transform(w)
    r = float(abs(r))
    delta = 0.25
    head = _h_head(w, s, l, r, delta=delta)
    xi_cut = tr.xi_cutoff(s.real, 1e-13 * max(tr.scale, 1.0))
    x_max = min(2 * l * xi_cut, 2 * l * tr.xi_max)

    def integrand(x):
        k0 = k0_grid(x, r)
        c = tr.cos_transform(x / (2 * l))
        return np.exp((s - 1) * np.log(x)) * k0 * c

    # middle region in u = log x (log-frequency 2r), upper region linear in x
    def mid(u):
        x = np.exp(u)
        return integrand(x) * x

    parts = []
    for piece, a, b, freq, fvec in (
            ("mid", math.log(delta), math.log(16.0), max(2 * r, 2.0) / (2 * math.pi), mid),
            ("hi", 16.0, x_max, (1.0 + w.a2 / (2 * l) + (2 * r) / 16.0) / (2 * math.pi), integrand)):
        if b <= a:
            continue
        n0 = int(max(64, freq * (b - a) * 24))
        vr, er = _simpson_doubling(lambda t: fvec(t).real, a, b, n0, tol / 20)
        if abs(s.imag) > 1e-12:
            vi, ei = _simpson_doubling(lambda t: fvec(t).imag, a, b, n0, tol / 20)
        else:
            vi, ei = 0.0, 0.0
        parts.append(complex(vr, vi))
    pref = 2.0 * SQRT_PI * np.exp(-s * math.log(4.0 * l))
    return pref * (head + sum(parts))


def _hyp_series_vec(a: complex, b: complex, c: complex, z: np.ndarray,
                    tol: float = 1e-15, kmax: int = 4000) -> np.ndarray:
    """2F1 direct series over a vector of arguments |z| < 1 (shared params)."""
    term = np.ones_like(z, dtype=np.complex128)
    total = np.ones_like(z, dtype=np.complex128)
    for k in range(kmax):
        term = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * z
        total += term
        if np.max(np.abs(term)) < tol * max(1.0, float(np.max(np.abs(total)))):
            return total
    raise ConvergenceError("vectorized 2F1 series did not converge")


def _h1_single(w: WindowSpec, s: complex, l: int, r: complex, tol: float):
    """h1(w;s;r): the x > 2l hypergeometric piece of Lemma-form h."""
    lo = max(w.a1, 2.0 * l)
    if w.a2 <= 2 * l:
        return 0j
    A = math.pi * (s / 2 - 0.5)
    if abs(complex(r).imag) < 1e-14:
        rr = complex(r).real
        sinratio = cmath.cos(A) - 1j * cmath.sin(A) / math.tanh(math.pi * rr)
    else:
        sinratio = cmath.sin(cmath.pi * (s / 2 - 0.5 + 1j * r)) / cmath.sin(cmath.pi * 1j * r)
    gfac = cmath.exp(_lg(0.5 + s / 2 + 1j * r) + _lg(s / 2 + 1j * r) - _lg(1 + 2j * r))

    def fvec(x):
        z = (4.0 * l * l) / (x * x)
        F = _hyp_series_vec(s / 2 + 1j * r, s / 2 + 0.5 + 1j * r, 1 + 2j * r, z.astype(np.complex128))
        phase = np.exp(-2j * r * np.log(x / (2.0 * l)))
        return window_eval(w, x) / (2.0 * np.exp(s * np.log(x))) * phase * F

    freq = 2 * abs(complex(r).real) / lo / (2 * math.pi) + 0.5
    vr, _ = _gl_doubling(lambda x: fvec(x).real, lo, w.a2, tol, freq=freq * 2 * math.pi)
    vi, _ = _gl_doubling(lambda x: fvec(x).imag, lo, w.a2, tol, freq=freq * 2 * math.pi)
    return sinratio * gfac * complex(vr, vi)


def _h2(w: WindowSpec, s: complex, l: int, r: complex, tol: float):
    """h2(w;s;r): the x < 2l hypergeometric piece."""
    hi = min(w.a2, 2.0 * l)
    if w.a1 >= 2 * l:
        return 0j
    gfac = cmath.exp(_lg(s / 2 + 1j * r) + _lg(s / 2 - 1j * r)) / SQRT_PI

    def fvec(x):
        z = (x * x) / (4.0 * l * l)
        F = _hyp_series_vec(s / 2 + 1j * r, s / 2 - 1j * r, 0.5, z.astype(np.complex128))
        return window_eval(w, x) * F

    vr, _ = _gl_doubling(lambda x: fvec(x).real, w.a1, hi, tol, freq=2 * abs(complex(r)) + 1)
    vi, _ = _gl_doubling(lambda x: fvec(x).imag, w.a1, hi, tol, freq=2 * abs(complex(r)) + 1)
    return np.exp(-s * math.log(2.0 * l)) * cmath.cos(cmath.pi * s / 2) * gfac * complex(vr, vi)


def _h_hyper(w: WindowSpec, s: complex, l: int, r: complex, tol: float = 1e-9):
    """Lemma-form h = h1(r) + h1(-r) + h2, valid on 0 < Re s < 3/2."""
    s = complex(s)
    if not (0 < s.real < 1.5):
        raise DomainError("hypergeometric h requires 0 < Re s < 3/2")
    r = complex(r)
    if abs(r.imag) < 1e-14 and abs(r.real) < 0.01:
        # h is even and analytic in r^2: quadratic extrapolation in r^2
        rs = (0.02, 0.035, 0.05)
        vals = [_h_hyper(w, s, l, rv, tol) for rv in rs]
        u = [rv * rv for rv in rs]
        ut = r.real * r.real
        out = 0j
        for i in range(3):
            li = 1.0
            for jj in range(3):
                if jj != i:
                    li *= (ut - u[jj]) / (u[i] - u[jj])
            out += vals[i] * li
        return out
    if abs(r.imag) < 1e-14:
        r = complex(r.real)
    return _h1_single(w, s, l, r, tol) + _h1_single(w, s, l, -r, tol) \
        + _h2(w, s, l, r, tol)


def _h_closed_s1(w: WindowSpec, r: float, tol: float = 1e-11):
    """h(w;1;r) = sqrt(pi) int w(2 cosh xi) cos(2 r xi) dxi (l = 1)."""
    lo = math.acosh(max(w.a1, 2.0) / 2.0) if w.a1 > 2 else 0.0
    hi = math.acosh(w.a2 / 2.0)

    def fvec(xi):
        return window_eval(w, 2.0 * np.cosh(xi)) * np.cos(2.0 * r * xi)

    val, _ = _gl_doubling(fvec, lo, hi, tol, freq=2 * abs(r) + 1)
    return complex(SQRT_PI * val)


def h_weight(w: WindowSpec, s: complex, l: int, r, method: str = "hypergeometric") -> complex:
    """Maass-spectrum weight h(w; s; r), even in r.

    Methods: 'integral' (Bessel-kernel transform, real r), 'hypergeometric'
    (Lemma-form continuation, r may be complex), 'closed_s1' (s=1, l=1 cosine
    transform in the geodesic variable).
    """
    if not w.compact:
        raise DomainError("h_weight requires a compact window")
    s = complex(s)
    if method == "integral":
        if abs(complex(r).imag) > 1e-14:
            raise DomainError("integral h supports real r only")
        return complex(_h_integral(w, s, l, float(complex(r).real)))
    if method == "hypergeometric":
        return complex(_h_hyper(w, s, l, r))
    if method == "closed_s1":
        if abs(s - 1) > 1e-12 or l != 1:
            raise DomainError("closed_s1 requires s = 1 and l = 1")
        return _h_closed_s1(w, float(complex(r).real))
    raise DomainError(f"unknown h_weight method {method!r}")


def h_special_point(w: WindowSpec, s: complex, l: int) -> complex:
    """h(w; s; (s-1)/2i) in closed elementary form, Re s <= 1, s != 1/2.

    Gamma(s - 1/2)/(2l)^(1-s) [ sin(pi s/2) int_{2l}^inf w (x^2-4l^2)^(1/2-s)
    + cos(pi s/2) int_0^{2l} w (4l^2-x^2)^(1/2-s) ].
    """
    s = complex(s)
    if s.real > 1 + 1e-12:
        raise DomainError("h_special_point requires Re s <= 1")
    if abs(s - 0.5) < 1e-10:
        raise PoleError("Gamma(s-1/2) pole at s=1/2; caller takes the limit")
    pref = cmath.exp(_lg(s - 0.5)) * np.exp((s - 1) * math.log(2.0 * l))
    upper = 0j
    if w.a2 > 2 * l:
        t_lo = math.acosh(max(w.a1, 2.0 * l) / (2.0 * l))
        t_hi = math.acosh(w.a2 / (2.0 * l))

        def fu(t):
            x = 2.0 * l * np.cosh(t)
            fac = np.exp((2.0 - 2.0 * s) * np.log(2.0 * l * np.sinh(np.maximum(t, 1e-300))))
            return window_eval(w, x) * fac

        vr, _ = _gl_doubling(lambda t: fu(t).real, t_lo, t_hi, 1e-11, freq=1.0)
        vi, _ = _gl_doubling(lambda t: fu(t).imag, t_lo, t_hi, 1e-11, freq=1.0)
        upper = cmath.sin(cmath.pi * s / 2) * complex(vr, vi)
    lower = 0j
    if w.a1 < 2 * l:
        th_lo = math.asin(w.a1 / (2.0 * l))
        th_hi = math.asin(min(w.a2, 2.0 * l) / (2.0 * l))

        def fl(th):
            x = 2.0 * l * np.sin(th)
            fac = np.exp((2.0 - 2.0 * s) * np.log(2.0 * l * np.cos(np.minimum(th, math.pi / 2 - 1e-300))))
            return window_eval(w, x) * fac

        vr, _ = _gl_doubling(lambda t: fl(t).real, th_lo, th_hi, 1e-11, freq=1.0)
        vi, _ = _gl_doubling(lambda t: fl(t).imag, th_lo, th_hi, 1e-11, freq=1.0)
        lower = cmath.cos(cmath.pi * s / 2) * complex(vr, vi)
    return complex(pref * (upper + lower))


def h_integral_zero(w: WindowSpec, l: int = 1, R: float | None = None) -> float:
    """|int_{-R}^{R} h(w;1;r) dr| via the closed s=1 form; -> 0 when w(2)=0.

    Interchanging integrals gives sqrt(pi) int w(2 cosh xi) sin(2 R xi)/xi dxi.
    R is pushed until the value stops decreasing. If w(2) != 0 the limit is
    (pi^(3/2)/2) w(2) instead (diagnostic regime), reported with a warning.
    """
    if l != 1:
        raise DomainError("h_integral_zero is specified at l = 1")
    w2 = float(window_eval(w, 2.0))
    if abs(w2) > 1e-12:
        warnings.warn("window does not vanish at 2; integral converges to "
                      "(pi^{3/2}/2) w(2), not 0", RuntimeWarning)
    lo = math.acosh(max(w.a1, 2.0) / 2.0) if w.a1 > 2 else 0.0
    hi = math.acosh(w.a2 / 2.0)

    def val_at(R):
        def fvec(xi):
            xi_safe = np.where(xi == 0, 1e-300, xi)
            kern = np.where(xi == 0, 2.0 * R, np.sin(2.0 * R * xi_safe) / xi_safe)
            return window_eval(w, 2.0 * np.cosh(xi)) * kern

        v, _ = _gl_doubling(fvec, lo, hi, 1e-12, freq=2 * R + 1)
        return SQRT_PI * v

    if R is not None:
        return abs(val_at(R))
    best = math.inf
    for Rk in (30.0, 45.0, 60.0, 80.0):
        v = abs(val_at(Rk))
        best = min(best, v)
        if v < 1e-9:
            break
    return best
