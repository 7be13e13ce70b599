"""``wbloch`` command line: intensity maps, cascade profiles, spectra, fringes.

Exit codes: 0 success, 2 bad arguments or inconsistent configuration,
3 I/O failure, 4 violated numerical contract.
"""
import argparse
from dataclasses import dataclass
import math
import sys

import numpy as np

from . import emit
from .fourier import REFERENCE_WIDTH, NonUnimodalSpectrumError, spectral_profile, spectral_width
from .lattice import LatticeParams
from .observables import INPUT_KINDS, IntensityMap, intensity_map
from .propagator import EigensolverError, Method, numeric_propagator, unitarity_defect
from .splitter import CascadeSpec, cascade_amplitudes
from .states import AmplitudeProfile, gaussian_profile, single_site_profile
from .twobeam import Coherent, EntangledW, FockPair, two_beam_intensity

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4

UNITARITY_TOLERANCE = 1e-10
PHOTON_NUMBER_TOLERANCE = 1e-9


class ProfileSpecError(ValueError):
    pass


class NumericalContractError(RuntimeError):
    pass


def _key_values(body, keys):
    try:
        pairs = dict(item.split("=", 1) for item in body.split(","))
    except ValueError:
        raise ProfileSpecError(f"expected key=value pairs, got {body!r}") from None
    if set(pairs) != set(keys):
        raise ProfileSpecError(f"expected keys {sorted(keys)}, got {sorted(pairs)}")
    return pairs


def parse_profile(spec: str, sites=None) -> AmplitudeProfile:
    """Build a profile from ``site:<p>``, ``gaussian:center=<r>,sigma=<r>`` or
    ``cascade:T=<r>,K=<i>``.

    ``sites`` may be omitted only for cascades, which fix their own size.
    """
    kind, sep, body = spec.partition(":")
    if not sep:
        raise ProfileSpecError(f"profile spec {spec!r} lacks a ':'")
    try:
        if kind == "cascade":
            pairs = _key_values(body, {"T", "K"})
            profile, _ = cascade_amplitudes(CascadeSpec(float(pairs["T"]), int(pairs["K"])))
            if sites is not None and len(profile) != sites:
                raise ProfileSpecError(
                    f"cascade yields {len(profile)} ports but the array has {sites} sites")
            return profile
        if sites is None:
            raise ProfileSpecError(f"profile {spec!r} needs an explicit number of sites")
        if kind == "site":
            return single_site_profile(sites, int(body))
        if kind == "gaussian":
            pairs = _key_values(body, {"center", "sigma"})
            return gaussian_profile(sites, float(pairs["center"]), float(pairs["sigma"]))
    except ProfileSpecError:
        raise
    except ValueError as exc:
        raise ProfileSpecError(f"invalid profile {spec!r}: {exc}") from exc
    raise ProfileSpecError(f"unknown profile kind {kind!r}")


@dataclass(frozen=True)
class ScenarioConfig:
    input_kind: str
    profile_spec: str
    sites: int = 26
    alpha: float = 0.5
    tau_max: float = 25.0
    tau_steps: int = 500
    method: str = "analytic"
    csv_path: str = None
    svg_path: str = None

    def __post_init__(self):
        if self.input_kind not in INPUT_KINDS:
            raise ValueError(f"input kind must be one of {INPUT_KINDS}")
        if self.tau_steps < 2:
            raise ValueError("tau_steps must be >= 2")
        if not (math.isfinite(self.tau_max) and self.tau_max > 0):
            raise ValueError("tau_max must be > 0")
        Method(self.method)

    @property
    def tau_grid(self):
        return np.linspace(0.0, self.tau_max, self.tau_steps)


def run_scenario(config: ScenarioConfig) -> IntensityMap:
    """Compute the intensity map of a scenario and write the requested files."""
    params = LatticeParams(config.sites, config.alpha)
    profile = parse_profile(config.profile_spec, config.sites)
    if config.input_kind == "fock" and not config.profile_spec.startswith("site:"):
        raise ProfileSpecError("a fock input needs a site:<p> profile")
    method = Method(config.method)
    imap = intensity_map(params, config.tau_grid, config.input_kind, profile, method)

    if method is Method.NUMERIC:
        defect = unitarity_defect(numeric_propagator(params, config.tau_max))
        if defect > UNITARITY_TOLERANCE:
            raise NumericalContractError(f"unitarity defect {defect:.3g} exceeds {UNITARITY_TOLERANCE}")
        drift = np.abs(imap.totals() - 1.0).max()
        if drift > PHOTON_NUMBER_TOLERANCE:
            raise NumericalContractError(f"photon number drifts by {drift:.3g}")

    if config.csv_path:
        emit.emit_csv(imap, config.csv_path)
    if config.svg_path:
        emit.emit_svg_heatmap(imap, config.svg_path)
    return imap


def parse_twobeam_state(text):
    """``w``, ``fock`` (one photon per beam), ``fock:n1,n2`` or ``coherent:a1,a2``."""
    name, _, body = text.partition(":")
    try:
        if name == "w" and not body:
            return EntangledW()
        if name == "fock":
            if not body:
                return FockPair(1, 1)
            n1, n2 = body.split(",")
            return FockPair(int(n1), int(n2))
        if name == "coherent":
            a1, a2 = body.split(",")
            return Coherent(complex(a1), complex(a2))
    except ValueError as exc:
        raise ProfileSpecError(f"invalid two-beam state {text!r}: {exc}") from exc
    raise ProfileSpecError(f"unknown two-beam state {text!r}")


def _output(text, path):
    if path:
        emit._write(path, text)
    else:
        sys.stdout.write(text)


def _cmd_simulate(args):
    config = ScenarioConfig(
        input_kind=args.input, profile_spec=args.profile, sites=args.sites,
        alpha=args.alpha, tau_max=args.tau_max, tau_steps=args.tau_steps,
        method=args.method, csv_path=args.out_csv, svg_path=args.out_svg)
    imap = run_scenario(config)
    if not (args.out_csv or args.out_svg):
        sys.stdout.write(emit.intensity_csv(imap))


def _cmd_cascade(args):
    profile, residual = cascade_amplitudes(CascadeSpec(args.transmissivity, args.stages))
    _output(emit.profile_csv(profile.amplitudes), args.out_csv)
    print(f"discarded fraction R^K = {emit.fmt(residual)}", file=sys.stderr)


def _cmd_spectrum(args):
    profile = parse_profile(args.profile, args.sites)
    spec = spectral_profile(profile, args.points)
    _output(emit.spectrum_csv(spec.k_grid, spec.values), args.out_csv)
    try:
        width = spectral_width(profile, args.points)
    except NonUnimodalSpectrumError as exc:
        print(f"half-height width undefined: {exc}", file=sys.stderr)
        return
    flag = "within" if abs(width - REFERENCE_WIDTH) <= 0.2 * REFERENCE_WIDTH else "outside"
    print(f"half-height width = {emit.fmt(width)} ({flag} 20% of reference {REFERENCE_WIDTH})",
          file=sys.stderr)


def _cmd_twobeam(args):
    state = parse_twobeam_state(args.state)
    thetas = np.linspace(0.0, 2.0 * math.pi, args.theta_steps)
    values = [two_beam_intensity(state, t) for t in thetas]
    _output(emit.twobeam_csv(thetas, values), args.out_csv)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wbloch", description="Bloch oscillations of single-photon W-states in waveguide arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="intensity map I_p(tau) of one input")
    sim.add_argument("--input", choices=INPUT_KINDS, required=True)
    sim.add_argument("--profile", required=True,
                     help="site:<p> | gaussian:center=<r>,sigma=<r> | cascade:T=<r>,K=<i>")
    sim.add_argument("--sites", type=int, default=26)
    sim.add_argument("--alpha", type=float, default=0.5)
    sim.add_argument("--tau-max", type=float, default=25.0)
    sim.add_argument("--tau-steps", type=int, default=500)
    sim.add_argument("--method", choices=[m.value for m in Method], default="analytic")
    sim.add_argument("--out-csv")
    sim.add_argument("--out-svg")
    sim.set_defaults(func=_cmd_simulate)

    cas = sub.add_parser("cascade", help="W-state amplitudes of the beam-splitter cascade")
    cas.add_argument("--transmissivity", type=float, required=True)
    cas.add_argument("--stages", type=int, required=True)
    cas.add_argument("--out-csv")
    cas.set_defaults(func=_cmd_cascade)

    spe = sub.add_parser("spectrum", help="quasi-momentum spectrum of a profile")
    spe.add_argument("--profile", required=True)
    spe.add_argument("--sites", type=int, help="array size (implied by cascade profiles)")
    spe.add_argument("--points", type=int, default=4097)
    spe.add_argument("--out-csv")
    spe.set_defaults(func=_cmd_spectrum)

    two = sub.add_parser("twobeam", help="two-beam fringe I(theta)")
    two.add_argument("--state", required=True, help="w | fock[:n1,n2] | coherent:a1,a2")
    two.add_argument("--theta-steps", type=int, default=101)
    two.add_argument("--out-csv")
    two.set_defaults(func=_cmd_twobeam)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (NumericalContractError, EigensolverError) as exc:
        print(f"wbloch: numerical contract violated: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"wbloch: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"wbloch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
