"""
Command handlers turning a RunConfig into a report dictionary.
"""
import logging
import math
from typing import Any, Callable, Dict, Optional

import numpy as np

from .arrowhead_rep import build_arrowhead, dense_eigs_oracle, verify_det_identity
from .excon_certify import F_compose, certify_excon, g_txi, gaussian_measure
from .gram import DEFAULT_PSD_TOL
from .monodromy import PathSpec, critical_data, loop_monodromy
from .pencil_core import PencilSpec
from .secular_solver import DEFAULT_TOL, interlacing_check, root_curve, roots_real
from .trace_exp import verify_trace_identity
from ..config.models import RunConfig

# Set up logger
logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
INFO = "info"

DET_TOL = 1e-8
ORACLE_TOL = 1e-8
TRACE_TOL = 1e-8
SUM_TOL = 1e-9
GAUSSIAN_TOL = 1e-6
CLOSURE_TOL = 1e-6


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


class CommandRunner:
    """
    Runs one command on a pencil and assembles its report.

    Every report has the keys command, inputs, tolerances, outputs and
    verdict; tabular results live under outputs["rows"].
    """

    def __init__(self, max_workers: Optional[int] = None):
        """
        Initialize the command runner.

        Args:
            max_workers: Worker threads for commands with independent sub-tasks.
        """
        self.max_workers = max_workers
        self._handlers: Dict[str, Callable[[PencilSpec, RunConfig], Dict[str, Any]]] = {
            "roots": self._run_roots,
            "interlace": self._run_interlace,
            "detrep": self._run_detrep,
            "trace": self._run_trace,
            "excon": self._run_excon,
            "critical": self._run_critical,
            "monodromy": self._run_monodromy,
            "gaussian": self._run_gaussian,
        }

    def run(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        """
        Run the configured command.

        Args:
            spec: Validated pencil.
            config: Run configuration.

        Returns:
            Report dictionary.
        """
        logger.info(f"Running command {config.command} on a pencil with {spec.n} poles")
        report = self._handlers[config.command](spec, config)
        if report["verdict"] == FAIL:
            logger.warning(f"Command {config.command} finished with verdict fail")
        return report

    def _report(
        self,
        config: RunConfig,
        spec: PencilSpec,
        tolerances: Dict[str, float],
        outputs: Dict[str, Any],
        verdict: str
    ) -> Dict[str, Any]:
        inputs = config.inputs()
        inputs["spec"] = spec.to_dict()
        return {
            "command": config.command,
            "inputs": inputs,
            "tolerances": tolerances,
            "outputs": outputs,
            "verdict": verdict,
        }

    def _run_roots(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        tol = config.tol or DEFAULT_TOL
        if config.grid is None:
            rs = roots_real(spec, config.t_values()[0], tol)
            outputs = {"roots": rs.roots, "residual": rs.residual}
            ok = interlacing_check(spec, rs)
        else:
            curve = root_curve(spec, config.t_values(), tol, self.max_workers)
            rows = []
            for rs in curve:
                row = {"t": rs.t, "residual": rs.residual}
                row.update({f"nu_{k}": value for k, value in enumerate(rs.roots.tolist())})
                rows.append(row)
            outputs = {"rows": rows}
            ok = all(interlacing_check(spec, rs) for rs in curve)
        return self._report(config, spec, {"residual": tol}, outputs, _verdict(ok))

    def _run_interlace(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        tol = config.tol or DEFAULT_TOL
        rows = []
        ok = True
        for t in config.t_values():
            rs = roots_real(spec, t, tol)
            interlaced = interlacing_check(spec, rs)
            expected_sum = t + float(np.sum(spec.mu))
            sum_error = abs(float(np.sum(rs.roots)) - expected_sum) / (1.0 + abs(expected_sum))
            row_ok = interlaced and sum_error <= SUM_TOL
            ok = ok and row_ok
            rows.append({
                "t": t,
                "interlaced": interlaced,
                "root_sum_error": sum_error,
                "residual": rs.residual,
                "verdict": _verdict(row_ok),
            })
        tolerances = {"residual": tol, "root_sum": SUM_TOL}
        return self._report(config, spec, tolerances, {"rows": rows}, _verdict(ok))

    def _run_detrep(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        pair = build_arrowhead(spec, config.sign)
        det_error = verify_det_identity(spec, pair, config.samples, config.seed)

        rows = []
        oracle_ok = True
        for t in config.t_values():
            secular = np.sort(roots_real(spec, t).roots)
            dense = dense_eigs_oracle(pair.pencil_matrix(t))
            error = float(np.max(np.abs(secular - dense))) / (1.0 + float(np.max(np.abs(dense))))
            oracle_ok = oracle_ok and error <= ORACLE_TOL
            rows.append({"t": t, "oracle_error": error})

        outputs = {
            "arrowhead": pair.to_dict(),
            "det_max_rel_error": det_error,
            "oracle": rows,
        }
        ok = det_error <= DET_TOL and oracle_ok
        tolerances = {"det_identity": DET_TOL, "oracle": ORACLE_TOL}
        return self._report(config, spec, tolerances, outputs, _verdict(ok))

    def _run_trace(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        xi = 1.0 if config.xi is None else config.xi
        rows = [
            {"t": t, "xi": xi, "rel_error": verify_trace_identity(spec, t, xi)}
            for t in config.t_values()
        ]
        ok = all(row["rel_error"] <= TRACE_TOL for row in rows)
        return self._report(config, spec, {"trace_identity": TRACE_TOL}, {"rows": rows}, _verdict(ok))

    def _run_excon(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        xi = 1.0 if config.xi is None else config.xi
        tol = config.tol or DEFAULT_PSD_TOL
        report = certify_excon(
            lambda t: g_txi(spec, t, xi),
            N=config.points,
            trials=config.trials,
            seed=config.seed,
            tol=tol,
            max_workers=self.max_workers,
        )
        return self._report(config, spec, {"psd": tol}, {"worst": report.to_dict()}, report.verdict)

    def _run_critical(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        crit = critical_data(spec)
        return self._report(config, spec, {}, crit.to_dict(), INFO)

    def _run_monodromy(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        if config.circle is not None:
            circle = config.circle
            loop = PathSpec.circle(
                complex(*circle.center),
                circle.radius,
                steps=config.steps,
                orientation=circle.orientation,
                base_angle=circle.base_angle,
                turns=circle.turns,
            )
        else:
            loop = PathSpec.polyline([complex(*vertex) for vertex in config.vertices], config.steps)

        result = loop_monodromy(spec, loop)
        outputs = {"loop": loop.to_dict(), **result.to_dict()}
        if result.closure_error > CLOSURE_TOL or result.matches_expected is False:
            verdict = FAIL
        elif result.expected is None:
            verdict = INFO
        else:
            verdict = PASS
        return self._report(config, spec, {"closure": CLOSURE_TOL}, outputs, verdict)

    def _run_gaussian(self, spec: PencilSpec, config: RunConfig) -> Dict[str, Any]:
        gamma = config.gamma
        measure = gaussian_measure(gamma, config.half_width, config.count)
        rows = []
        for t in config.t_values():
            composed = F_compose(spec, measure, t)
            direct = float(np.sum(np.exp(gamma * roots_real(spec, t).roots ** 2)))
            rows.append({
                "t": t,
                "F_compose": composed,
                "direct": direct,
                "abs_error": abs(composed - direct),
            })
        ok = all(math.isfinite(row["abs_error"]) and row["abs_error"] <= GAUSSIAN_TOL for row in rows)
        outputs = {"total_mass": measure.total_mass, "rows": rows}
        return self._report(config, spec, {"gaussian": GAUSSIAN_TOL}, outputs, _verdict(ok))
