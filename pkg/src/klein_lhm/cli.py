"""Command-line front end.

    klein-lhm {lhm,klein,map,coeffs,sweep} [--config FILE] [--set KEY=VALUE ...] [--out PREFIX]

Exit codes: 0 success, 2 config error, 3 numerical-domain error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .config import SCENARIOS, load_config
from .constants import C, HBAR, joule_to_uev, uev_to_joule
from .em_scatter import EmIncident, refract_em
from .errors import ConfigError, DomainError, SamplingError, UndefinedAxisError
from .kg_scatter import (
    KgIncident,
    KleinStep,
    evanescence_threshold,
    excess_potential,
    refract_kg,
)
from .mapping import map_table, potential_to_index
from .media import ConstantMedium, MediumDispersion, sample_medium
from .output import (
    write_density_csv,
    write_key_values,
    write_ppm,
    write_scale,
    write_table,
)
from .wavepacket import (
    BeamSpec,
    GridSpec,
    assemble_field,
    build_spectrum,
    centroid_angle,
    scatter_em,
    scatter_kg,
)

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN, EXIT_IO = 0, 2, 3, 4


def medium_from_config(cfg):
    model = MediumDispersion.fitted(
        center_frequency=cfg["medium.center_frequency"],
        epsilon=cfg["medium.epsilon"],
        mu=cfg["medium.mu"],
        fill_factor=cfg["medium.fill_factor"],
    )
    losses = (cfg["medium.electric_loss"], cfg["medium.magnetic_loss"])
    if losses != (0.0, 0.0):
        model = MediumDispersion(
            model.plasma_frequency, model.magnetic_resonance_frequency, model.magnetic_fill_factor, losses
        )
    return model


def klein_from_config(cfg):
    return KleinStep(uev_to_joule(cfg["klein.V_ueV"]), cfg["klein.m"], uev_to_joule(cfg["klein.E_ueV"]))


def _beam(cfg, center):
    return BeamSpec(
        center,
        cfg["beam.theta_i"],
        cfg["beam.angular_sigma"],
        cfg["beam.n_components"],
        cfg["beam.n_spectral"],
        cfg["beam.spectral_sigma"],
    )


def _grid(cfg, wavelength):
    half = cfg["grid.span_wavelengths"] * wavelength / 2
    return GridSpec(-half, half, -half, half, cfg["grid.nx"], cfg["grid.nz"])


def _emit_field(prefix, field):
    write_density_csv(f"{prefix}.density.csv", field)
    vmin, vmax = write_ppm(f"{prefix}.density.ppm", field)
    write_scale(f"{prefix}.scale.txt", vmin, vmax)


def _snell_angle(sin_theta, index):
    """Signed refraction angle; negative for a negative index."""
    return math.copysign(math.asin(sin_theta / abs(index)), index)


def run_lhm(cfg, out):
    model = medium_from_config(cfg)
    omega = 2 * math.pi * cfg["medium.center_frequency"]
    theta = cfg["beam.theta_i"]
    med = sample_medium(model, omega)
    center = refract_em(EmIncident.from_angle(omega, theta), med)
    components = build_spectrum(_beam(cfg, omega))
    results = scatter_em(components, model)
    field = assemble_field(
        components, results, _grid(cfg, 2 * math.pi * C / omega), t=cfg["grid.t"], workers=cfg["grid.workers"]
    )
    measured = centroid_angle(field, "transmitted")
    snell = _snell_angle(math.sin(theta), med.n)
    prefix = cfg.output_prefix
    _emit_field(prefix, field)
    summary = [
        ("scenario", "lhm"),
        ("frequency_hz", cfg["medium.center_frequency"]),
        ("omega", omega),
        ("epsilon", med.epsilon),
        ("mu", med.mu),
        ("n", med.n),
        ("n_g", med.n_g),
        ("theta_i", theta),
        ("sigma", center.sigma),
        ("regime", center.regime),
        ("tau", center.tau),
        ("rho", center.rho),
        ("T", center.T),
        ("R", center.R),
        ("theta_t_snell", snell),
        ("theta_t_centroid", measured),
    ]
    write_key_values(f"{prefix}.summary.txt", summary)
    print(
        f"lhm: n={med.n:.3f} eps={med.epsilon:.3f} mu={med.mu:.3f} theta_i={math.degrees(theta):.2f} deg "
        f"T={center.T:.3f} R={center.R:.3f} theta_t={math.degrees(snell):.2f} deg "
        f"(beam centroid {math.degrees(measured):.2f} deg)",
        file=out,
    )


def run_klein(cfg, out):
    step = klein_from_config(cfg)
    theta = cfg["beam.theta_i"]
    center = refract_kg(step, KgIncident.from_angle(step, theta))
    components = build_spectrum(_beam(cfg, step.E))
    results = scatter_kg(components, step.V, step.m)
    wavelength = 2 * math.pi / step.incident_wavenumber
    field = assemble_field(components, results, _grid(cfg, wavelength), t=cfg["grid.t"], workers=cfg["grid.workers"])
    prefix = cfg.output_prefix
    _emit_field(prefix, field)
    summary = [
        ("scenario", "klein"),
        ("E_ueV", joule_to_uev(step.E)),
        ("V_ueV", joule_to_uev(step.V)),
        ("m", step.m),
        ("delta_V_ueV", joule_to_uev(excess_potential(step))),
        ("threshold_ueV", joule_to_uev(evanescence_threshold(step.m, abs(center.K[0])))),
        ("theta_i", theta),
        ("regime", center.regime),
        ("tau", center.tau),
        ("rho", center.rho),
        ("T", center.T),
        ("R", center.R),
    ]
    line = (
        f"klein: E={joule_to_uev(step.E):.2f} ueV V={joule_to_uev(step.V):.2f} ueV "
        f"theta_i={math.degrees(theta):.2f} deg regime={center.regime} T={center.T:.3f} R={center.R:.3f}"
    )
    if center.regime == "strong-propagating":
        index = potential_to_index(step.V, step.E, step.m)
        measured = centroid_angle(field, "transmitted")
        snell = _snell_angle(math.sin(theta), index)
        summary += [("effective_index", index), ("theta_t_snell", snell), ("theta_t_centroid", measured)]
        line += f" theta_t={math.degrees(snell):.2f} deg (beam centroid {math.degrees(measured):.2f} deg)"
    write_key_values(f"{prefix}.summary.txt", summary)
    print(line, file=out)


def run_map(cfg, out):
    model = medium_from_config(cfg)
    V = uev_to_joule(cfg["klein.V_ueV"])
    freqs = np.linspace(cfg["map.f_min"], cfg["map.f_max"], cfg["map.count"])
    rows = map_table(model, V, 2 * np.pi * freqs)
    table = [
        (omega, omega / (2 * math.pi), n, joule_to_uev(E), joule_to_uev(Vb))
        for omega, n, E, Vb in rows
    ]
    prefix = cfg.output_prefix
    write_table(f"{prefix}.table.csv", ["omega", "frequency_hz", "n", "E_ueV", "V_ueV"], table)
    spread = max(abs(r[4] - cfg["klein.V_ueV"]) for r in table)
    omega_c = 2 * math.pi * cfg["medium.center_frequency"]
    n_c = sample_medium(model, omega_c).n
    E_c = V / (1 - n_c)
    write_key_values(
        f"{prefix}.summary.txt",
        [
            ("scenario", "map"),
            ("V_ueV", cfg["klein.V_ueV"]),
            ("center_n", n_c),
            ("center_E_ueV", joule_to_uev(E_c)),
            ("center_photon_energy_ueV", joule_to_uev(HBAR * omega_c)),
            ("max_V_deviation_ueV", spread),
            ("rows", len(table)),
        ],
    )
    print(
        f"map: V={cfg['klein.V_ueV']:.2f} ueV, {len(table)} components, center n={n_c:.4f} -> "
        f"E={joule_to_uev(E_c):.3f} ueV, max |V - V0| = {spread:.3g} ueV",
        file=out,
    )


def _coeff_row(theta, res, regime):
    tau, rho = complex(res.tau), complex(res.rho)
    return (theta, regime, res.T, res.R, tau.real, tau.imag, rho.real, rho.imag)


def run_coeffs(cfg, out):
    rows = []
    if cfg["coeffs.picture"] == "lhm":
        omega = 2 * math.pi * cfg["medium.center_frequency"]
        if cfg["coeffs.n"] is not None:
            med = sample_medium(ConstantMedium.from_index(cfg["coeffs.n"], cfg["coeffs.mu"]), omega)
        else:
            med = sample_medium(medium_from_config(cfg), omega)
        for theta in cfg["coeffs.angles"]:
            res = refract_em(EmIncident.from_angle(omega, theta), med)
            rows.append(_coeff_row(theta, res, res.regime))
    else:
        step = klein_from_config(cfg)
        for theta in cfg["coeffs.angles"]:
            res = refract_kg(step, KgIncident.from_angle(step, theta))
            rows.append(_coeff_row(theta, res, res.regime))
    prefix = cfg.output_prefix
    header = ["theta_i", "regime", "T", "R", "tau_re", "tau_im", "rho_re", "rho_im"]
    write_table(f"{prefix}.table.csv", header, rows)
    write_key_values(f"{prefix}.summary.txt", [("scenario", "coeffs"), ("picture", cfg["coeffs.picture"]), ("rows", len(rows))])
    for row in rows:
        print(f"theta_i={row[0]:.6g} regime={row[1]} T={row[2]:.6g} R={row[3]:.6g}", file=out)


def _sweep_values(cfg):
    start, stop, count = cfg["sweep.start"], cfg["sweep.stop"], cfg["sweep.count"]
    if cfg["sweep.random"]:
        rng = np.random.default_rng(cfg.seed)
        return np.sort(rng.uniform(start, stop, count))
    return np.linspace(start, stop, count)


def run_sweep(cfg, out):
    picture, param = cfg["sweep.picture"], cfg["sweep.parameter"]
    allowed = {"klein": ("V_ueV", "E_ueV", "theta_i"), "lhm": ("theta_i", "frequency")}[picture]
    if param not in allowed:
        raise ConfigError("sweep.parameter", f"{picture} sweeps accept {', '.join(allowed)}")
    rows = []
    for value in _sweep_values(cfg):
        value = float(value)
        try:
            if picture == "klein":
                E, V = cfg["klein.E_ueV"], cfg["klein.V_ueV"]
                theta = cfg["beam.theta_i"]
                if param == "V_ueV":
                    V = value
                elif param == "E_ueV":
                    E = value
                else:
                    theta = value
                step = KleinStep(uev_to_joule(V), cfg["klein.m"], uev_to_joule(E))
                res = refract_kg(step, KgIncident.from_angle(step, theta))
                qz = complex(res.Q[1])
                rows.append((value, res.regime, joule_to_uev(excess_potential(step)), qz.real, qz.imag, res.T, res.R))
            else:
                model = medium_from_config(cfg)
                omega = 2 * math.pi * cfg["medium.center_frequency"]
                theta = cfg["beam.theta_i"]
                if param == "frequency":
                    omega = 2 * math.pi * value
                else:
                    theta = value
                med = sample_medium(model, omega)
                if isinstance(med.n, complex):
                    rows.append((value, "stopband", math.nan, math.nan, math.nan, 0.0, 1.0))
                    continue
                res = refract_em(EmIncident.from_angle(omega, theta), med)
                qz = complex(res.Q[1])
                rows.append((value, res.regime, med.n, qz.real, qz.imag, res.T, res.R))
        except DomainError as exc:
            # measure-zero points (regime boundary, interface pole) stay in the table
            rows.append((value, type(exc).__name__, math.nan, math.nan, math.nan, math.nan, math.nan))
    third = "delta_V_ueV" if picture == "klein" else "n"
    header = [param, "regime", third, "Qz_re", "Qz_im", "T", "R"]
    prefix = cfg.output_prefix
    write_table(f"{prefix}.table.csv", header, rows)
    write_key_values(
        f"{prefix}.summary.txt",
        [("scenario", "sweep"), ("picture", picture), ("parameter", param), ("rows", len(rows)), ("seed", cfg.seed)],
    )
    print(f"sweep: {picture} over {param}, {len(rows)} rows -> {prefix}.table.csv", file=out)


RUNNERS = {"lhm": run_lhm, "klein": run_klein, "map": run_map, "coeffs": run_coeffs, "sweep": run_sweep}


def run_scenario(cfg, out=None):
    """Execute ``cfg`` and return a process exit code."""
    out = out or sys.stdout
    try:
        os.makedirs(os.path.dirname(cfg.output_prefix) or ".", exist_ok=True)
        RUNNERS[cfg.scenario](cfg, out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DomainError, SamplingError, UndefinedAxisError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="klein-lhm",
        description="Negative refraction in a left-handed medium and at a strong Klein step.",
    )
    parser.add_argument("scenario", choices=SCENARIOS)
    parser.add_argument("--config", metavar="PATH", help="key = value configuration file")
    parser.add_argument("--set", metavar="KEY=VALUE", action="append", default=[], help="override one key")
    parser.add_argument("--out", metavar="PREFIX", help="output path stem")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    overrides = list(args.set)
    if args.out is not None:
        overrides.append(f"output_prefix={args.out}")
    try:
        cfg = load_config(args.scenario, args.config, overrides)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return run_scenario(cfg)


if __name__ == "__main__":
    sys.exit(main())
