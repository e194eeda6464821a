"""Reference constants, reference curves, and seeded Monte Carlo
experiments at desk scale.

Asymptotic formulas are reported as ratio columns, never pass/fail; the
only hard rows are those backed by finite-n certified bounds.  Trend bands
used by the acceptance checks were fixed by calibration runs against the
exact engine and are recorded here as constants.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from . import graph as gr
from . import minors
from .rng import derive_seed

# Calibration band for mean exact Hadwiger number over the reference curve
# at n in {10, 12, 14}, p = 1/2 (50 seeded trials); fixed from a calibration
# run of the exact engine before freezing the acceptance suite.
BCE_CALIBRATION_BAND = (0.85, 1.15)  # calibration run: 0.962 / 1.010 / 1.056

# Success-rate floor for the randomized star extraction at k in {20, 40},
# n = ceil(1.2 k), 200 seeded trials; fixed by a calibration run.
STAR_SUCCESS_FLOOR = 0.99


@dataclass(frozen=True)
class Constants:
    lambda_: float  # root in (0,1) of 1 - x + 2x ln x = 0
    beta: float     # (1 - lambda) / (2 sqrt(ln(1/lambda))) / sqrt(log2 e)

    @property
    def pre_division(self) -> float:
        return (1 - self.lambda_) / (2 * math.sqrt(math.log(1 / self.lambda_)))


def _lambda_equation(x: float) -> float:
    return 1 - x + 2 * x * math.log(x)


def compute_constants() -> Constants:
    """Bisection on (0, 1/2) to 1e-14; the equation is positive near 0 and
    negative at 1/2."""
    lo, hi = 1e-12, 0.5
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _lambda_equation(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    lam = 0.5 * (lo + hi)
    beta = (1 - lam) / (2 * math.sqrt(math.log(1 / lam))) / math.sqrt(math.log2(math.e))
    return Constants(lam, beta)


def bce_curve(n: int, p: float) -> float:
    """Reference curve n * sqrt(log2(1/(1-p)) / log2(n)) for the Hadwiger
    number of a dense random graph."""
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    if n < 2:
        raise ValueError("n must be at least 2")
    return n * math.sqrt(math.log2(1 / (1 - p)) / math.log2(n))


def clique_density_curve(k: int) -> float:
    """beta * k * sqrt(log2 k): asymptotic edges-per-vertex threshold for a
    forced K_k-minor."""
    return compute_constants().beta * k * math.sqrt(math.log2(k))


# ---------------------------------------------------------------------------
# Tabular reports.

@dataclass
class ExperimentReport:
    name: str
    parameters: dict
    columns: list[str]
    rows: list[tuple]
    seed: int

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_fmt(x) for x in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "parameters": self.parameters,
            "seed": self.seed,
            "columns": self.columns,
            "rows": [list(r) for r in self.rows],
        }, indent=2, sort_keys=True) + "\n"

    def write(self, directory) -> tuple[Path, Path]:
        """Write {name}-{seed}.csv and the mirrored JSON."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        csv_path = directory / f"{self.name}-{self.seed}.csv"
        json_path = directory / f"{self.name}-{self.seed}.json"
        csv_path.write_text(self.to_csv())
        json_path.write_text(self.to_json())
        return csv_path, json_path


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".9g")


# ---------------------------------------------------------------------------
# Experiments.  Per-trial seeds come from derive_seed(master, index), so the
# tables are independent of scheduling and worker count.

def bce_experiment(n_values: list[int], p: float, trials: int, seed: int,
                   mode: str = "exact") -> ExperimentReport:
    """Hadwiger numbers of G(n, p) samples against the reference curve.

    Exact mode is restricted to n <= 14; heuristic mode records certified
    lower bounds only.
    """
    if mode not in ("exact", "heuristic"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact" and any(n > 14 for n in n_values):
        raise ValueError("exact mode restricted to n <= 14")
    rows = []
    for j, n in enumerate(n_values):
        values = []
        for t in range(trials):
            g = gr.random_gnp(n, p, derive_seed(seed, j * trials + t))
            res = minors.hadwiger_number(g, mode=mode,
                                         seed=derive_seed(seed, 10 ** 6 + j * trials + t))
            values.append(res.value)
        mean = sum(values) / trials
        var = sum((v - mean) ** 2 for v in values) / trials
        curve = bce_curve(n, p)
        rows.append((n, mean, math.sqrt(var), curve, mean / curve))
    return ExperimentReport(
        name="bce", seed=seed,
        parameters={"p": p, "trials": trials, "mode": mode},
        columns=["n", "mean_h", "std_h", "bce_curve", "ratio"],
        rows=rows)


def density_threshold_experiment(k: int, n: int, trials: int,
                                 seed: int) -> ExperimentReport:
    """Sweep edge counts m for uniform n-vertex m-edge graphs and record the
    fraction containing a K_k-minor; uniform-m sampling matches the
    edges-per-vertex framing of the threshold."""
    if k > 7 or n > 14:
        raise ValueError("exact minor checks restricted to k <= 7, n <= 14")
    target = gr.complete(k)
    total = n * (n - 1) // 2
    rows = []
    crossing = None
    for m in range(total + 1):
        hits = 0
        for t in range(trials):
            g = gr.random_gnm(n, m, derive_seed(seed, m * trials + t))
            if _has_clique_minor(g, k, target):
                hits += 1
        frac = hits / trials
        if crossing is None and frac >= 0.5:
            crossing = m
        rows.append((m, frac))
    bollobas = 8 * (k - 2) * int(math.floor(math.log2(k - 2))) * n if k >= 4 else n - 1
    return ExperimentReport(
        name="density", seed=seed,
        parameters={"k": k, "n": n, "trials": trials,
                    "crossing_m": crossing,
                    "beta_curve_edges": clique_density_curve(k) * n,
                    "bollobas_bound_edges": bollobas},
        columns=["m", "fraction_with_minor"],
        rows=rows)


def _has_clique_minor(g: gr.Graph, k: int, target: gr.Graph) -> bool:
    if k <= 2:
        return g.n >= k and (k < 2 or g.m >= 1)
    if k == 3:
        return not minors.is_k3_minor_free(g)
    if k == 4:
        return not minors.is_k4_minor_free(g)
    return minors.find_minor(g, target).status == minors.FOUND


def star_ramsey_experiment(k_values: list[int], epsilon: float, trials: int,
                           seed: int) -> ExperimentReport:
    """Random 2-colorings at n = ceil((1+eps) k), running the randomized
    star-minor extraction and verifying every witness."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    rows = []
    for j, k in enumerate(k_values):
        n = math.ceil((1 + epsilon) * k)
        successes = 0
        verified = 0
        dom_sizes = []
        for t in range(trials):
            red = gr.random_gnp(n, 0.5, derive_seed(seed, j * trials + t))
            blue = gr.complement(red)
            out = minors.star_minor_extract(
                red, blue, k, epsilon=epsilon,
                seed=derive_seed(seed, 10 ** 6 + j * trials + t))
            if out is None:
                continue
            color, model = out
            successes += 1
            dom_sizes.append(len(model.branch_sets[0]))
            if minors.verify_minor_model((red, blue)[color], model):
                verified += 1
        rows.append((k, n, successes / trials,
                     sum(dom_sizes) / len(dom_sizes) if dom_sizes else 0.0,
                     verified))
    return ExperimentReport(
        name="star", seed=seed,
        parameters={"epsilon": epsilon, "trials": trials},
        columns=["k", "n", "success_rate", "mean_dominating_set_size",
                 "witnesses_verified"],
        rows=rows)
