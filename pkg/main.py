import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from config.settings import settings
from utils.errors import EnumapError, UsageError
from utils.logger import app_logger, silence

CHECK_SUITES = ("kp", "bkp", "virasoro", "monotone", "pfaffian", "recurrences", "colored", "meanders",
                "universality")


# --- parâmetros ---

def _ints(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as e:
        raise UsageError(f"expected comma separated integers, got {text!r}") from e


def parse_sigma(text: str, n: Optional[int] = None) -> Tuple[int, ...]:
    """'id', 'shift:k' (precisam de --n) ou uma lista '0,2,1'"""
    from oracle.permutations import cyclic_shift, identity

    text = text.strip()
    if text == "id" or text.startswith("shift:"):
        if n is None:
            raise UsageError(f"--sigma {text} needs --n")
        if text == "id":
            return identity(n)
        try:
            return cyclic_shift(n, int(text.split(":", 1)[1]))
        except ValueError as e:
            raise UsageError(f"bad shift {text!r}") from e
    sigma = _ints(text)
    if n is not None and len(sigma) != n:
        raise UsageError(f"--sigma has {len(sigma)} points but --n is {n}")
    return sigma


def series_frame(series) -> pd.DataFrame:
    from algebra.rational import format_value

    return pd.DataFrame([{"k": k, "value": format_value(c)} for k, c in enumerate(series.coeffs)],
                        columns=["k", "value"])


# --- subcomandos ---

def _recurrence(family: str, nmax: int, m: int):
    from recurrences.nonoriented import nonoriented_maps_cc, nonoriented_maps_uz
    from recurrences.one_face import FAMILIES as ONE_FACE
    from recurrences.one_face import one_face
    from recurrences.orientable import cc_maps, gj_triangulations, kz_bipartite, louf_constellations

    builders: Dict[str, Callable] = {
        "gj_triangulations": lambda: gj_triangulations(nmax),
        "cc_maps": lambda: cc_maps(nmax),
        "kz_bipartite": lambda: kz_bipartite(nmax),
        "louf_constellations": lambda: louf_constellations(m, nmax),
        "nonoriented_maps": lambda: nonoriented_maps_cc(nmax),
        "nonoriented_maps_uz": lambda: nonoriented_maps_uz(nmax),
    }
    for name in ONE_FACE:
        builders[f"one_face_{name}"] = (lambda name=name: one_face(nmax, name))
    if family not in builders:
        raise UsageError(f"unknown family {family!r}; expected one of {sorted(builders)}")
    return builders[family]()


def cmd_recur(args) -> Tuple[pd.DataFrame, int]:
    from storage.exporter import table_frame

    family = args.family.replace("-", "_")
    params = {"nmax": args.nmax, "m": args.m}
    store = None
    if args.cache:
        from storage.database import TableStore
        store = TableStore()
        cached = store.load_table(family, params)
        if cached is not None:
            return table_frame(cached), 0
    table = _recurrence(family, args.nmax, args.m)
    if store is not None:
        store.save_table(table, params)
    return table_frame(table), 0


def cmd_oracle(args) -> Tuple[pd.DataFrame, int]:
    from oracle.constellations import count_constellations
    from oracle.factorizations import count_factorizations
    from oracle.maps import count_rooted_maps, count_rooted_nonoriented_maps
    from storage.exporter import table_frame

    marks = tuple(x for x in args.marks.split(",") if x)
    if args.kind == "maps":
        table = count_rooted_maps(args.n, args.constraints, marks, threads=args.threads)
    elif args.kind == "nonoriented":
        table = count_rooted_nonoriented_maps(args.n, marks, threads=args.threads)
    elif args.kind == "constellations":
        table = count_constellations(args.m, args.n, marks, threads=args.threads)
    else:
        if not args.classes:
            raise UsageError("factorizations need --classes, e.g. '2,1;2,1;3'")
        classes = [_ints(c) for c in args.classes.split(";")]
        count = count_factorizations(classes, args.transitive, threads=args.threads)
        return pd.DataFrame([{"classes": args.classes, "count": count}]), 0
    return table_frame(table), 0


def cmd_tau(args) -> Tuple[pd.DataFrame, int]:
    from algebra.series import series_log
    from tau.builders import build_tau_family

    tau = build_tau_family(args.family, args.order)
    series = series_log(tau.series) if args.log else tau.series
    return series_frame(series), 0


def cmd_spectral(args) -> Tuple[pd.DataFrame, int]:
    from spectral.curve import cylinder_W02, disc_W01
    from spectral.system import ABSystem, solve_AB

    system = solve_AB(ABSystem.create(args.m, D1=args.D1, D2=args.D2), args.order)
    series = cylinder_W02(system, args.order) if args.cylinder else disc_W01(system, args.order)
    return series_frame(series), 0


def cmd_bubble(args) -> Tuple[pd.DataFrame, int]:
    from colored.bubbles import cycle_bubble, octahedron_bubble, quartic_bubble
    from colored.gluings import GluingEnumerator, gmax
    from colored.graph import automorphism_count, read_graph

    if args.path:
        B = read_graph(args.path)
    elif args.kind == "octahedron":
        B = octahedron_bubble()
    elif args.kind == "quartic":
        B = quartic_bubble(_ints(args.colors), args.d)
    else:
        B = cycle_bubble(args.size)
    if args.copies:
        census = GluingEnumerator(args.threads).enumerate([(B, args.copies)])
        return pd.DataFrame([{"copies": args.copies, "c_max": census.c_max, "maximizers": len(census.maximizers),
                              "labeled": census.labeled, "rooted": census.rooted}]), 0
    value, maximizers = gmax(B, args.threads)
    row = {"d": B.d, "n": B.n, "C": value, "maximizers": len(maximizers)}
    if B.is_connected():
        row["automorphisms"] = automorphism_count(B)
    return pd.DataFrame([row]), 0


def cmd_meander(args) -> Tuple[pd.DataFrame, int]:
    from meanders.systems import MeanderEnumerator, meander_set

    if args.table:
        counts = MeanderEnumerator(args.threads).enumerate(args.n, args.statistic)
        return pd.DataFrame([{"value": k, "count": v} for k, v in sorted(counts.items())]), 0
    sigma = parse_sigma(args.sigma, args.n)
    white = parse_sigma(args.white, len(sigma)) if args.white else None
    return pd.DataFrame([{"sigma": ",".join(map(str, sigma)), "count": meander_set(sigma, white)}]), 0


def cmd_universality(args) -> Tuple[pd.DataFrame, int]:
    from algebra.rational import parse_rat
    from universality.critical import critical_point
    from universality.stuffed import disc_weights, on_weights, rooted_total, stuffed_Mk
    from universality.system import colored_series

    if args.stuffed:
        order = settings.DEFAULT_ORDER if args.order is None else args.order
        weights = dict(disc_weights(2 * order))
        if args.stuffed == "on":
            weights.update(on_weights(2 * order))
        return series_frame(rooted_total(stuffed_Mk(weights, order))), 0
    order = settings.UNIVERSALITY_ORDER if args.order is None else args.order
    N = parse_rat(args.N)
    if args.critical or args.estimate:
        point = critical_point(N, estimate=args.estimate, T=args.exponent_order)
        row = {"N": str(point.N), "theta_c": str(point.theta_c), "t_c": str(point.t_c),
               "minimal_polynomial": str(point.minimal_polynomial.as_expr()),
               "interval": f"[{point.interval[0]}, {point.interval[1]}]", "phase": point.phase}
        if point.exponent is not None:
            row["exponent_estimate"] = round(point.exponent, 6)
        return pd.DataFrame([row]), 0
    return series_frame(colored_series(N, order)), 0


# --- suítes de verificação ---

def _doubled(series):
    from algebra.series import gen

    R = series.ring
    names = [str(s) for s in R.symbols if str(s).startswith("p")]
    return series.substitute({n: gen(R, n) * 2 for n in names})


def _suite_kp(order: Optional[int]) -> List[Tuple[str, bool]]:
    from algebra.series import series_log
    from hierarchy.kp import kp_residual
    from tau.builders import build_tau_family

    T = order or settings.KP_ORDER
    return [(f"kp {family} T={T}", kp_residual(series_log(build_tau_family(family, T).series)).is_zero())
            for family in ("maps", "bip")]


def _suite_bkp(order: Optional[int]) -> List[Tuple[str, bool]]:
    from algebra.series import TSeries, gen, series_log
    from hierarchy.bkp import ChargedSeries, bkp_residuals, fixed_charge_residual
    from tau.builders import build_tau_family

    T = max(order or settings.BKP_ORDER, 4)
    zonal = _doubled(build_tau_family("zonal_maps", T).series)
    u = gen(zonal.ring, "u")
    S2 = TSeries.from_coeffs(zonal.ring, T, {4: u * (u - 1)})
    charged = ChargedSeries.from_symbolic(zonal, "u")
    out = [(f"bkp order {k} T={T}", bkp_residuals(charged, S2, k).is_zero()) for k in (1, 2, 3)]
    if T % 2:
        out.append((f"fixed charge T={T}", fixed_charge_residual(series_log(zonal)).is_zero()))
    return out


def _suite_virasoro(order: Optional[int]) -> List[Tuple[str, bool]]:
    from hierarchy.virasoro import virasoro_residual
    from tau.builders import build_tau_family

    T = order or settings.VIRASORO_ORDER
    ranges = {"maps": range(-1, 5), "zonal_maps": range(-1, 5), "bip": range(0, 5), "zonal_bip": range(0, 5)}
    out = []
    for family, indices in ranges.items():
        tau = build_tau_family(family, T).series
        out.extend((f"L_{i} {family} T={T}", virasoro_residual(family, i, tau).is_zero()) for i in indices)
    return out


def _suite_monotone(order: Optional[int]) -> List[Tuple[str, bool]]:
    from hierarchy.monotone import monotone_evolution_residual
    from tau.builders import build_tau_family

    T = order or settings.DEFAULT_ORDER
    run = min(3, T)
    return [
        (f"monotone b=0 T={T}", monotone_evolution_residual(build_tau_family("monotone", T, run_order=run), 0).is_zero()),
        (f"monotone b=1 T={T}",
         monotone_evolution_residual(build_tau_family("zonal_monotone", T, run_order=run), 1).is_zero()),
    ]


def _suite_pfaffian(order: Optional[int]) -> List[Tuple[str, bool]]:
    from hierarchy.pfaffian import verify_monotone_pfaffian
    from partitions.partition import partitions_up_to

    size = order or settings.DEFAULT_ORDER
    ok = all(verify_monotone_pfaffian(lam, n) for lam in partitions_up_to(size)
             for n in range(max(len(lam), 1), size + 1))
    return [(f"monotone pfaffian |λ| <= {size}", ok)]


def _suite_recurrences(order: Optional[int]) -> List[Tuple[str, bool]]:
    from algebra.series import make_ring
    from recurrences.golden import golden_table, oracle_conditions

    rings = {"gj_triangulations": None, "cc_maps": ("u",), "kz_bipartite": ("u", "v"), "louf_constellations": None}
    return [(f"golden {family}", golden_table(family, make_ring(names) if names else None) == oracle_conditions(family))
            for family, names in rings.items()]


def _suite_colored(order: Optional[int]) -> List[Tuple[str, bool]]:
    from colored.bubbles import octahedron_bubble
    from colored.gluings import gmax, quartic_model_check

    value, maximizers = gmax(octahedron_bubble())
    return [
        ("octahedron gmax", (value, len(maximizers)) == (8, 3)),
        ("quartic model {1,2} x2 d=4", quartic_model_check([{1, 2}], [2], 4).ok),
    ]


def _suite_meanders(order: Optional[int]) -> List[Tuple[str, bool]]:
    from meanders.arches import catalan, motzkin
    from meanders.sif import sif_series_check
    from meanders.systems import irreducible_series_check, meander_set
    from oracle.permutations import cyclic_shift, identity

    n = min(order or settings.DEFAULT_ORDER, settings.MAX_MEANDER_N)
    return [
        (f"identity Cat_{n}", meander_set(identity(n)) == catalan(n)),
        (f"shift Motzkin_{n}", meander_set(cyclic_shift(n, 1)) == motzkin(n)),
        (f"SIF series T={n}", sif_series_check(n)),
        (f"irreducible series T={min(n, 5)}", irreducible_series_check(min(n, 5))),
    ]


def _suite_universality(order: Optional[int]) -> List[Tuple[str, bool]]:
    import sympy

    from universality.critical import critical_point, discriminant_check
    from universality.system import colored_series, maps_quadratic_residual, nonseparable_composition_check

    T = order or settings.UNIVERSALITY_ORDER
    baby = critical_point(sympy.Rational(9, 5))
    return [
        (f"planar maps quadratic T={T}", maps_quadratic_residual(colored_series(1, T)).is_zero()),
        (f"nonseparable composition T={T}", nonseparable_composition_check(T)),
        ("t_c(9/5) = 25/432", baby.t_c == sympy.Rational(25, 432) and discriminant_check(baby)),
    ]


SUITES: Dict[str, Callable[[Optional[int]], List[Tuple[str, bool]]]] = {
    "kp": _suite_kp,
    "bkp": _suite_bkp,
    "virasoro": _suite_virasoro,
    "monotone": _suite_monotone,
    "pfaffian": _suite_pfaffian,
    "recurrences": _suite_recurrences,
    "colored": _suite_colored,
    "meanders": _suite_meanders,
    "universality": _suite_universality,
}


def cmd_check(args) -> Tuple[pd.DataFrame, int]:
    results = SUITES[args.suite](args.order)
    frame = pd.DataFrame([{"check": name, "ok": bool(ok)} for name, ok in results], columns=["check", "ok"])
    failed = [name for name, ok in results if not ok]
    for name in failed:
        app_logger.error(f"Check failed: {name}")
    app_logger.info(f"Suite {args.suite}: {len(results) - len(failed)}/{len(results)} checks passed")
    return frame, 1 if failed else 0


# --- CLI ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--output", help="arquivo de saída (padrão: stdout)")
    common.add_argument("--threads", type=int, default=None, help="sobrepõe ENUMAP_THREADS neste job")
    common.add_argument("--quiet", action="store_true", help="sem logs no console")

    parser = argparse.ArgumentParser(prog="enumap", description="Enumeração exata de mapas e verificação de identidades")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recur", parents=[common], help="tabelas de gênero pelas recorrências")
    p.add_argument("--family", required=True)
    p.add_argument("--nmax", type=int, default=settings.DEFAULT_ORDER)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--cache", action="store_true", help="usa o cache SQL de tabelas")
    p.set_defaults(handler=cmd_recur)

    p = sub.add_parser("oracle", parents=[common], help="contagens por força bruta")
    p.add_argument("--kind", choices=("maps", "nonoriented", "constellations", "factorizations"), default="maps")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--constraints", default="none")
    p.add_argument("--marks", default="genus")
    p.add_argument("--classes", default="")
    p.add_argument("--transitive", action="store_true")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("tau", parents=[common], help="coeficientes de uma função tau")
    p.add_argument("--family", default="maps")
    p.add_argument("--order", type=int, default=settings.DEFAULT_ORDER)
    p.add_argument("--log", action="store_true", help="log τ em vez de τ")
    p.set_defaults(handler=cmd_tau)

    p = sub.add_parser("check", parents=[common], help="suítes de identidades (saída 1 se alguma falhar)")
    p.add_argument("--suite", choices=CHECK_SUITES, required=True)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("spectral", parents=[common], help="W_(0,1) ou W_(0,2) em gênero zero")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--D1", type=int, default=1)
    p.add_argument("--D2", type=int, default=1)
    p.add_argument("--order", type=int, default=settings.SPECTRAL_ORDER)
    p.add_argument("--cylinder", action="store_true")
    p.set_defaults(handler=cmd_spectral)

    p = sub.add_parser("bubble", parents=[common], help="G^max de uma bolha ou censo de colagens")
    p.add_argument("--kind", choices=("octahedron", "quartic", "cycle"), default="octahedron")
    p.add_argument("--path", help="bolha no formato de texto")
    p.add_argument("--colors", default="1")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--size", type=int, default=2)
    p.add_argument("--copies", type=int, default=0)
    p.set_defaults(handler=cmd_bubble)

    p = sub.add_parser("meander", parents=[common], help="|M_σ| ou tabela de sistemas de meandros")
    p.add_argument("--sigma", default="id")
    p.add_argument("--white", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--table", action="store_true")
    p.add_argument("--statistic", default="components")
    p.set_defaults(handler=cmd_meander)

    p = sub.add_parser("universality", parents=[common], help="f_N, ponto crítico e mapas recheados")
    p.add_argument("--N", default="1")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--critical", action="store_true")
    p.add_argument("--estimate", action="store_true")
    p.add_argument("--exponent-order", type=int, default=None)
    p.add_argument("--stuffed", choices=("disc", "on"), default=None)
    p.set_defaults(handler=cmd_universality)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    from storage.exporter import render, write_output

    args = build_parser().parse_args(argv)
    if args.quiet:
        silence()
    if args.threads is not None and args.threads < 1:
        app_logger.error(f"--threads must be positive, got {args.threads}")
        return UsageError.exit_code
    if args.command == "meander" and args.table and args.n is None:
        app_logger.error("--table needs --n")
        return UsageError.exit_code

    settings.create_directories()
    try:
        app_logger.info(f"Job {args.command} iniciado")
        frame, code = args.handler(args)
        text = render(frame, args.format)
        if args.output:
            write_output(text, args.output)
        else:
            sys.stdout.write(text)
        return code
    except EnumapError as e:
        app_logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except Exception as e:
        app_logger.error(f"Erro crítico: {e}")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
