"""Plain-text state files and the MCMS sweep table.

State file layout::

    3
    0.333,0 0.1,0 0.1,0
    0.1,0 0.333,0 0.1,0
    0.1,0 0.1,0 0.334,0

Line 1 holds ``d``; each of the next ``d`` lines holds ``d`` whitespace
separated entries ``re,im``. Blank lines and lines starting with ``#`` are
ignored.
"""

import io
from dataclasses import astuple, dataclass

import numpy as np

from .errors import CoherenceError, NotHermitianError
from .measures import c_l1, c_r
from .solver import SolverConfig, c_g, c_tr_modified
from .states import mcms, validate_density

IO_TOL = 1e-8
SWEEP_HEADER = ("p", "c_l1", "c_tr_mod", "c_g", "c_r")


class StateFileError(CoherenceError):
    pass


def parse_state(text: str, tol: float = IO_TOL) -> np.ndarray:
    """Parse state-file text, validate at ``tol`` and return a clean density matrix."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise StateFileError("empty state file")
    try:
        d = int(lines[0])
    except ValueError:
        raise StateFileError(f"first line must be the dimension, got {lines[0]!r}") from None
    if d < 1:
        raise StateFileError(f"dimension must be positive, got {d}")
    rows = lines[1:]
    if len(rows) != d:
        raise StateFileError(f"expected {d} matrix rows, found {len(rows)}")
    A = np.empty((d, d), dtype=complex)
    for i, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != d:
            raise StateFileError(f"row {i + 1} has {len(tokens)} entries, expected {d}")
        for j, tok in enumerate(tokens):
            parts = tok.split(",")
            try:
                if len(parts) == 1:
                    A[i, j] = float(parts[0])
                elif len(parts) == 2:
                    A[i, j] = complex(float(parts[0]), float(parts[1]))
                else:
                    raise ValueError
            except ValueError:
                raise StateFileError(f"row {i + 1}, column {j + 1}: cannot parse entry {tok!r}") from None
    try:
        A = validate_density(A, tol=tol, hermitian_tol=tol)
    except NotHermitianError as exc:
        raise StateFileError(f"Hermiticity condition violated: {exc}") from None
    except CoherenceError as exc:
        raise StateFileError(str(exc)) from None
    return _clean(A)


def _clean(A):
    # bring an I/O-tolerance state inside the library's tighter tolerances
    w, V = np.linalg.eigh(A)
    if w[0] < 0.0:
        A = (V * np.clip(w, 0.0, None)) @ V.conj().T
        A = 0.5 * (A + A.conj().T)
    return A / np.trace(A).real


def read_state(path, tol: float = IO_TOL) -> np.ndarray:
    with open(path, encoding="ascii") as fh:
        return parse_state(fh.read(), tol)


def format_state(rho) -> str:
    rho = np.asarray(rho)
    out = [str(rho.shape[0])]
    for row in rho:
        out.append(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row.astype(complex)))
    return "\n".join(out) + "\n"


def write_state(path, rho):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_state(rho))


@dataclass
class SweepRow:
    p: float
    c_l1: float
    c_tr_mod: float
    c_g: float
    c_r: float

    def ordered(self, tol: float = 1e-4) -> bool:
        return self.c_g <= self.c_tr_mod + tol and self.c_tr_mod <= self.c_l1 + tol


def mcms_sweep(d: int, p_min: float, p_max: float, steps: int, cfg: SolverConfig | None = None) -> list:
    """Evaluate the four coherence measures of ``mcms(d, p)`` on ``steps`` evenly spaced ``p``."""
    if d < 2:
        raise CoherenceError(f"sweep needs d >= 2, got {d}")
    if not (0.0 < p_min < p_max <= 1.0):
        raise CoherenceError(f"sweep range must satisfy 0 < p_min < p_max <= 1, got [{p_min}, {p_max}]")
    if steps < 2:
        raise CoherenceError(f"sweep needs at least 2 steps, got {steps}")
    cfg = cfg or SolverConfig()
    rows = []
    for p in np.linspace(p_min, p_max, steps):
        rho = mcms(d, float(p))
        rows.append(SweepRow(float(p), c_l1(rho), c_tr_modified(rho, cfg).value, c_g(rho, cfg), c_r(rho)))
    return rows


def format_sweep_csv(rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(SWEEP_HEADER) + "\n")
    for row in rows:
        buf.write(",".join(f"{v:.9f}" for v in astuple(row)) + "\n")
    return buf.getvalue()


def write_sweep_csv(rows, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_sweep_csv(rows))
