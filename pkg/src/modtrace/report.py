"""Bundle of all measures for one state, with per-entry method tags."""

from dataclasses import dataclass, field

from .errors import BadParameterError
from .measures import c_l1, c_r, hs_bound, m_l, m_tr
from .solver import SolverConfig, c_tr_modified, geometric_coherence
from .states import validate_density

CANONICAL = ("c_l1", "c_r", "c_tr_mod", "c_g", "m_l", "m_tr", "hs_bound")

ALIASES = {
    "l1": "c_l1",
    "rel-entropy": "c_r",
    "relative-entropy": "c_r",
    "mod-trace": "c_tr_mod",
    "modified-trace": "c_tr_mod",
    "geometric": "c_g",
    "linear-mixedness": "m_l",
    "trace-mixedness": "m_tr",
    "hs-bound": "hs_bound",
}


def resolve_measures(names) -> list:
    """Map user-facing names (comma lists allowed, ``all``) to canonical names, keeping order."""
    out = []
    for chunk in names:
        for name in chunk.split(","):
            name = name.strip()
            if not name:
                continue
            if name == "all":
                targets = list(CANONICAL)
            else:
                key = ALIASES.get(name, name)
                if key not in CANONICAL:
                    raise BadParameterError(f"unknown measure {name!r}")
                targets = [key]
            out.extend(t for t in targets if t not in out)
    return out


@dataclass
class MeasureReport:
    c_l1: float | None = None
    c_r: float | None = None
    c_tr_mod: float | None = None
    c_g: float | None = None
    m_l: float | None = None
    m_tr: float | None = None
    hs_bound: float | None = None
    methods: dict = field(default_factory=dict)  # name -> "closed-form" | "solver" | "optimizer"
    iterations: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)
    converged: dict = field(default_factory=dict)

    def present(self):
        return [(n, getattr(self, n)) for n in CANONICAL if getattr(self, n) is not None]

    def violations(self) -> list:
        """Names of the report invariants that fail (empty when consistent)."""
        bad = [f"{n} negative" for n, v in self.present() if v < -1e-9]
        if None not in (self.c_tr_mod, self.c_l1) and self.c_tr_mod > self.c_l1 + 1e-6:
            bad.append("c_tr_mod > c_l1")
        if None not in (self.c_g, self.c_tr_mod) and self.c_g > self.c_tr_mod + 1e-4:
            bad.append("c_g > c_tr_mod")
        return bad


def measure_report(rho, names=CANONICAL, cfg: SolverConfig | None = None) -> MeasureReport:
    cfg = cfg or SolverConfig()
    rho = validate_density(rho)
    rep = MeasureReport()
    closed = {"c_l1": c_l1, "c_r": c_r, "m_l": m_l, "m_tr": m_tr, "hs_bound": lambda r: hs_bound(r).value}
    for name in names:
        if name in closed:
            setattr(rep, name, closed[name](rho))
            rep.methods[name] = "closed-form"
            rep.iterations[name] = 0
            rep.converged[name] = True
        elif name == "c_tr_mod":
            res = c_tr_modified(rho, cfg)
            rep.c_tr_mod = res.value
            rep.methods[name] = "solver"
            rep.iterations[name] = res.iterations
            rep.certificates[name] = res.certificate
            rep.converged[name] = res.converged
        elif name == "c_g":
            res = geometric_coherence(rho, cfg)
            rep.c_g = res.value
            rep.methods[name] = "optimizer"
            rep.iterations[name] = res.iterations
            rep.converged[name] = res.converged
        else:
            raise BadParameterError(f"unknown measure {name!r}")
    return rep
