"""Command-line surface.

Subcommands: spectrum | check | enumerate | sweep | milnor | tjurina | verify.
Exit codes: 0 success, 1 input error, 2 internal consistency failure.
All rationals are printed as "p/q"; decimal columns are advisory renderings
with 12 significant digits.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product

from . import localg, verify
from .conjecture import enumerate_candidates, thm31_verdict, tjurina_defect
from .errors import InternalConsistencyError, TjspectraError
from .families import (PuiseuxParams, SwhParams, ThreeMonomialParams,
                       TjurinaInstance, brieskorn_two_var, puiseux_instance,
                       swh_instance, three_monomial_instance)
from .poly import parse_poly
from .rational import decimal_str, format_ratio
from .spectra import stats_of_values, subset_stats

FAMILY_PARAMS = {
    "brieskorn": ("a", "b"),
    "swh": ("a", "b", "c", "d"),
    "three-monomial": ("a", "b", "c", "d"),
    "puiseux": ("a", "b", "d", "q", "r"),
}

TSV_COLUMNS = ("family", "params", "mu", "tau", "delta_exact", "delta_decimal",
               "thm31", "av_obs")


def build_instance(family, values, cross_check=False):
    """Construct a TjurinaInstance for a CLI family spec.

    Returns (instance, is_swh).  Brieskorn instances get the full index set
    as their Tjurina subset (mu = tau for weighted-homogeneous input).
    """
    if family == "brieskorn":
        s = brieskorn_two_var(values["a"], values["b"])
        f = parse_poly(f"x^{values['a']}+y^{values['b']}")
        inst = TjurinaInstance(s, frozenset(range(1, s.mu + 1)), s.mu, f,
                               f"brieskorn({values['a']},{values['b']})")
        return inst, True
    if family == "swh":
        p = SwhParams(values["a"], values["b"], values["c"], values["d"])
        return swh_instance(p, cross_check=cross_check), True
    if family == "three-monomial":
        p = ThreeMonomialParams(values["a"], values["b"], values["c"], values["d"])
        return three_monomial_instance(p, cross_check=cross_check), False
    if family == "puiseux":
        p = PuiseuxParams(values["a"], values["b"], values["d"], values["q"], values["r"])
        return puiseux_instance(p, consecutive=True, verify_milnor=cross_check), False
    raise TjspectraError(f"unknown family {family!r}")


def sign_marker(x: Fraction) -> str:
    return "+" if x > 0 else ("-" if x < 0 else "0")


# --- subcommand bodies ---

def cmd_spectrum(args):
    values = _collect_params(args, FAMILY_PARAMS[args.family])
    inst, _ = build_instance(args.family, values, cross_check=args.cross_check)
    s = inst.spectrum
    print(f"family: {inst.family_tag}")
    print(f"mu = {s.mu}")
    print(f"tau = {inst.tau}")
    print("spectrum:", " ".join(format_ratio(v) for v in s.values))
    if inst.tjurina_indices is not None:
        mask = "".join("1" if i in inst.tjurina_indices else "0"
                       for i in range(1, s.mu + 1))
        print(f"tjurina_mask: {mask}")
        missing = [format_ratio(s.value_at(i)) for i in range(1, s.mu + 1)
                   if i not in inst.tjurina_indices]
        print("missing:", " ".join(missing) if missing else "(none)")
    else:
        print("tjurina_mask: (undetermined)")
    return 0


def cmd_check(args):
    values = _collect_params(args, FAMILY_PARAMS[args.family])
    inst, is_swh = build_instance(args.family, values, cross_check=args.cross_check)
    delta = tjurina_defect(inst)
    v = thm31_verdict(inst, is_swh)
    print(f"family: {inst.family_tag}")
    print(f"mu = {inst.mu}  tau = {inst.tau}")
    print(f"delta = {format_ratio(delta)} ({sign_marker(delta)}) ~ {decimal_str(delta)}")
    print(f"thm31_guaranteed_failure = {str(v.guaranteed_failure).lower()}")
    print(f"av_tj_le_av = {str(v.av_condition).lower()}")
    return 0


def cmd_enumerate(args):
    f = parse_poly(args.poly)
    exps = _as_brieskorn(f)
    if exps is None:
        raise TjspectraError("enumerate supports only Brieskorn polynomials x^a + y^b")
    a, b = exps
    s = brieskorn_two_var(a, b)
    result = enumerate_candidates(s, s.mu, args.slack)
    print(f"mu = {s.mu}  tau = {s.mu}  k = {result.k}")
    if result.clamped:
        print(f"A replaced by {result.slack}")
    for rec in result.records:
        print(f"tau' = {rec.tau_prime}  j = {rec.j}  max_index = {s.mu - rec.j}  "
              f"delta = {format_ratio(rec.stats.delta)} ~ {decimal_str(rec.stats.delta)}")
    return 0


def _as_brieskorn(f):
    if f.nvars != 2 or len(f.terms) != 2:
        return None
    pures = {}
    for e, c in f.terms.items():
        if c != 1:
            return None
        nz = [v for v in range(2) if e[v] > 0]
        if len(nz) != 1:
            return None
        pures[nz[0]] = e[nz[0]]
    if set(pures) != {0, 1} or min(pures.values()) < 2:
        return None
    return pures[0], pures[1]


def _parse_range(text):
    """Accept "5", "3:12" (inclusive), or "1,3,5"."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    if "," in text:
        return [int(t) for t in text.split(",")]
    return [int(text)]


def sweep_row(family, values, subset):
    """One sweep row, or None when the tuple is invalid for the family."""
    try:
        inst, is_swh = build_instance(family, values)
        if subset == "drop-max":
            indices = range(1, inst.mu)
        else:
            if inst.tjurina_indices is None:
                return None
            indices = sorted(inst.tjurina_indices)
        st = subset_stats(inst.spectrum, indices)
    except TjspectraError:
        return None
    full_av = stats_of_values(inst.spectrum.values).av
    sub_inst = TjurinaInstance(inst.spectrum, frozenset(indices), st.tau,
                               inst.defining_poly, inst.family_tag)
    v = thm31_verdict(sub_inst, is_swh)
    return {
        "family": family,
        "params": ",".join(str(values[k]) for k in FAMILY_PARAMS[family]),
        "mu": inst.mu,
        "tau": inst.tau,
        "delta_exact": format_ratio(st.delta),
        "delta_decimal": decimal_str(st.delta),
        "thm31": str(v.guaranteed_failure).lower(),
        "av_obs": str(st.av <= full_av).lower(),
    }


def _sweep_worker(job):
    return sweep_row(*job)


def cmd_sweep(args):
    names = FAMILY_PARAMS[args.family]
    ranges = []
    for name in names:
        raw = getattr(args, name)
        if raw is None:
            raise TjspectraError(f"sweep over family {args.family!r} requires --{name}")
        ranges.append(_parse_range(raw))
    if any(not r for r in ranges):
        raise TjspectraError("empty parameter range")
    tuples = sorted(product(*ranges))
    jobs = [(args.family, dict(zip(names, t)), args.subset) for t in tuples]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_worker, jobs))
    else:
        rows = [_sweep_worker(j) for j in jobs]
    rows = [r for r in rows if r is not None]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        out = ["\t".join(TSV_COLUMNS)]
        out.extend("\t".join(str(r[c]) for c in TSV_COLUMNS) for r in rows)
        sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_milnor(args):
    print(localg.milnor(parse_poly(args.poly, nvars=args.nvars)))
    return 0


def cmd_tjurina(args):
    print(localg.tjurina(parse_poly(args.poly, nvars=args.nvars)))
    return 0


def cmd_verify(args):
    return verify.run_checks(skip_localg=args.skip_localg)


def _collect_params(args, names):
    values = {}
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise TjspectraError(f"missing required parameter --{name}")
        values[name] = v
    return values


def _add_family_flags(sub):
    sub.add_argument("family", choices=sorted(FAMILY_PARAMS))
    for name in ("a", "b", "c", "d", "q", "r"):
        sub.add_argument(f"--{name}", type=int)
    sub.add_argument("--cross-check", action="store_true",
                     help="recompute mu/tau with the local standard-basis engine")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="tjspectra",
                     description="Exact Tjurina spectra and Hertling variance defects")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[], help="print a family spectrum")
    _add_family_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="defect and failure-criterion verdict for one instance")
    _add_family_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="candidate Tjurina spectra of a Brieskorn polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--slack", type=int, default=10,
                   help="how far below tau the candidate Tjurina numbers may go")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="tabulate defects over parameter ranges (TSV or JSON)")
    p.add_argument("family", choices=sorted(FAMILY_PARAMS))
    for name in ("a", "b", "c", "d", "q", "r"):
        p.add_argument(f"--{name}", help="integer, lo:hi range, or comma list")
    p.add_argument("--subset", choices=["tjurina", "drop-max"], default="tjurina",
                   help="index subset the delta column is computed over")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    for name, fn in (("milnor", cmd_milnor), ("tjurina", cmd_tjurina)):
        p = sub.add_parser(name, help=f"{name} number via local standard basis")
        p.add_argument("--poly", required=True)
        p.add_argument("--nvars", type=int, default=2)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run the built-in verification suite")
    p.add_argument("--skip-localg", action="store_true",
                   help="skip checks that need the standard-basis engine")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except TjspectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
