"""Command-line front end.

    essvars nessvar "x^3 + x^2y - 2x^2z - 2xyz + xz^2 + yz^2" --vars x,y,z
    essvars essvar  ...
    essvars newpres ... --basis "y+z,x-z"
    essvars cylinder "x^2 + y^2 - 1" --vars x,y,z
    essvars verify  ... --basis "y+z,x-z" --g "y[1]y[2]^2 + y[2]^3"

Exit codes: 0 success, 1 verification failed, 2 unreadable input,
3 input that parses but cannot be processed.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from .errors import EssVarsError, ParseError
from .parser import parse, render, render_list
from .poly import Polynomial, VarContext, homogenize
from .reduce import (
    Presentation,
    detect_cylinder,
    ess_var,
    fresh_name,
    n_ess,
    new_presentation,
    verify_presentation,
)

SEPARATOR = "-" * 31
COMMANDS = ("nessvar", "essvar", "newpres", "cylinder", "verify")

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


@dataclass
class CliRequest:
    command: str
    expr: str
    vars: list | None = None
    basis: list | None = None
    format: str = "text"
    homogenize_auto: bool = True
    g: str | None = None
    verbose: bool = False


def _split_list(values) -> list | None:
    if not values:
        return None
    out = []
    for value in values:
        out.extend(part.strip() for part in value.split(",") if part.strip())
    return out


def _shift(err: ParseError, offset: int, text: str) -> ParseError:
    pos = None if err.pos is None else err.pos + offset
    return type(err)(err.message, pos, text)


def parse_input(text: str, variables=None) -> Polynomial:
    """Parse a polynomial, or an equation ``lhs = rhs`` as ``lhs - rhs``."""
    if "=" not in text:
        return parse(text, variables)
    lhs, rhs = text.split("=", 1)
    if "=" in rhs:
        raise ParseError("more than one '='", len(lhs) + 1 + rhs.index("="), text)
    names = variables
    if names is None:
        left = parse(lhs).context.names
        try:
            right = parse(rhs).context.names
        except ParseError as e:
            raise _shift(e, len(lhs) + 1, text) from None
        names = tuple(dict.fromkeys(left + right))
    f = parse(lhs, names)
    try:
        g = parse(rhs, names)
    except ParseError as e:
        raise _shift(e, len(lhs) + 1, text) from None
    return f - g


class _Output:
    def __init__(self, req: CliRequest, stream: TextIO):
        self.req = req
        self.stream = stream
        self.data = {"command": req.command}
        self.lines = []

    def note(self, text):
        self.lines.append(f"-- {text}")

    def line(self, text):
        self.lines.append(text)

    def flush(self):
        if self.req.format == "json":
            self.stream.write(json.dumps(self.data, indent=2) + "\n")
        else:
            self.stream.write("\n".join(self.lines + [SEPARATOR]) + "\n")


def _basis_forms(req: CliRequest, f: Polynomial) -> list | None:
    if req.basis is None:
        return None
    return [parse(text, f.context.names) for text in req.basis]


def _describe_presentation(out: _Output, p: Presentation, old_names, verbose: bool):
    out.data["n_ess"] = p.r
    out.data["essential_vars"] = [render(y) for y in p.essential_forms]
    out.data["g"] = render(p.g)
    out.data["change"] = {
        "new_variables": list(p.change.new_context.names),
        "forward": [[str(q) for q in row] for row in p.change.forward.rows],
        "backward": [[str(q) for q in row] for row in p.change.backward.rows],
    }
    out.line(render(p.g))
    if verbose:
        for name, y in zip(p.g.context.names, p.essential_forms):
            out.line(f"{name} = {render(y)}")
        for name, image in zip(old_names, p.change.images()):
            out.line(f"{name} = {render(image)}")


def _cmd_nessvar(req, out, f):
    out.data["n_ess"] = n_ess(f)
    out.line(str(out.data["n_ess"]))


def _cmd_essvar(req, out, f):
    forms = ess_var(f).forms()
    out.data["n_ess"] = len(forms)
    out.data["essential_vars"] = [render(y) for y in forms]
    out.line(render_list(forms))


def _cmd_newpres(req, out, f):
    p = new_presentation(f, _basis_forms(req, f))
    # new_presentation already checked this; the CLI repeats it before printing
    if not verify_presentation(f, p):
        raise EssVarsError("presentation failed verification")
    _describe_presentation(out, p, f.context.names, req.verbose)


def _cmd_verify(req, out, f):
    basis = _basis_forms(req, f)
    if req.g is None:
        p = new_presentation(f, basis)
    else:
        forms = basis if basis is not None else ess_var(f).forms()
        g = parse(req.g, VarContext.indexed("y", len(forms)).names)
        p = Presentation(g, tuple(forms), None)
    ok = verify_presentation(f, p)
    out.data["essential_vars"] = [render(y) for y in p.essential_forms]
    out.data["g"] = render(p.g)
    out.data["verified"] = ok
    out.line("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_cylinder(req, out, f):
    report = detect_cylinder(f)
    names = list(report.homogenized.context.names)
    forms = [render(y) for y in report.essential_forms_h.forms()]
    cyl = {
        "is_cylinder": report.is_cylinder,
        "n_ess_h": report.n_ess_h,
        "homogenized_with": report.homogenizing_var,
        "essential_vars_h": forms,
    }
    if report.ruling_direction is not None:
        cyl["ruling_direction"] = [str(q) for q in report.ruling_direction]
    if report.is_cylinder:
        cyl["ruling_basis"] = [[str(q) for q in v] for v in report.ruling_basis]
    if report.reduced is not None:
        cyl["g"] = render(report.reduced.g)
    if report.notes:
        cyl["notes"] = list(report.notes)
    out.data["variables"] = names[:-1]
    out.data["cylinder"] = cyl

    out.line(f"cylinder: {'yes' if report.is_cylinder else 'no'}")
    out.line(f"n_ess(f^h): {report.n_ess_h}")
    out.line(f"essential variables: [{', '.join(forms)}]")
    if report.ruling_direction is not None:
        out.line("ruling direction: (" + ", ".join(str(q) for q in report.ruling_direction) + ")")
    elif report.is_cylinder and report.ruling_basis:
        vecs = ["(" + ", ".join(str(q) for q in v) + ")" for v in report.ruling_basis]
        out.line("ruling directions: [" + ", ".join(vecs) + "]")
    if req.verbose and report.reduced is not None:
        out.line(f"presentation: {cyl['g']}")
    for note in report.notes:
        out.note(note)


_HANDLERS = {
    "nessvar": _cmd_nessvar,
    "essvar": _cmd_essvar,
    "newpres": _cmd_newpres,
    "cylinder": _cmd_cylinder,
    "verify": _cmd_verify,
}


def _report_parse_error(err: ParseError, stream: TextIO):
    stream.write(f"parse error: {err}\n")
    if err.text is not None and err.pos is not None:
        stream.write(f"  {err.text}\n  {' ' * err.pos}^\n")


def run(req: CliRequest, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if req.command not in _HANDLERS:
        stderr.write(f"unknown command {req.command!r}\n")
        return EXIT_PARSE
    out = _Output(req, stdout)
    try:
        f = parse_input(req.expr, req.vars)
        if req.command != "cylinder" and not f.is_homogeneous():
            if not req.homogenize_auto:
                stderr.write("error: input is not homogeneous (automatic homogenization is disabled)\n")
                return EXIT_SEMANTIC
            t = fresh_name(f.context)
            f = homogenize(f, t)
            out.data["homogenized_with"] = t
            out.note(f"input is not homogeneous; homogenized with new variable {t}")
        out.data["variables"] = list(f.context.names)
        code = _HANDLERS[req.command](req, out, f)
    except ParseError as err:
        _report_parse_error(err, stderr)
        return EXIT_PARSE
    except (EssVarsError, ValueError) as err:
        stderr.write(f"error: {err}\n")
        return EXIT_SEMANTIC
    out.flush()
    return code or EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("expr", nargs="?", help="polynomial or equation; omit to read --file or stdin")
    common.add_argument("--file", help="read the polynomial from this file")
    common.add_argument("--vars", action="append", help="comma-separated variable order, e.g. x,y,z")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-homogenize", dest="homogenize_auto", action="store_false",
                        help="reject non-homogeneous input instead of homogenizing it")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="essvars", description="Essential variables of polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("nessvar", parents=[common], help="number of essential variables")
    sub.add_parser("essvar", parents=[common], help="basis of the essential variables")
    p = sub.add_parser("newpres", parents=[common], help="presentation in essential variables")
    p.add_argument("--basis", action="append", help="comma-separated essential forms to use as y[1..r]")
    sub.add_parser("cylinder", parents=[common], help="cylinder test for f = 0")
    p = sub.add_parser("verify", parents=[common], help="check a presentation g(y[1..r]) of f")
    p.add_argument("--basis", action="append", help="comma-separated essential forms y[1..r]")
    p.add_argument("--g", help="presentation over y[1..r]; re-derived when omitted")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sources = [s for s in (args.expr is not None, args.file is not None) if s]
    if len(sources) > 1:
        parser.error("give the polynomial either as an argument or with --file, not both")
    if args.expr is not None:
        text = args.expr
    elif args.file is not None:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as err:
            sys.stderr.write(f"error: {err}\n")
            return EXIT_PARSE
    else:
        text = sys.stdin.read()
    req = CliRequest(
        command=args.command,
        expr=text.strip().rstrip(";"),
        vars=_split_list(args.vars),
        basis=_split_list(getattr(args, "basis", None)),
        format=args.format,
        homogenize_auto=args.homogenize_auto,
        g=getattr(args, "g", None),
        verbose=args.verbose,
    )
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
