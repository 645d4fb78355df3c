"""
Batch runner for description files (see ``pact.dsl`` for the grammar).

    pact run <file> [--format json|text] [--out path]
    pact check <file>

Exit status: 0 when every expectation holds, 1 when one is violated or a
command fails, 2 on usage or parse errors. ``PACT_THREADS`` is read and
validated, but commands always run one after another.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import dsl
from .algebra import (Algebra, AlgebraError, AlgebraMorphism, Ideal, counterexample_algebra,
                      group_algebra, ideal_generated, is_semiprime, matrix_algebra, product_field,
                      upper_triangular, verify_isomorphism)
from .crossed import CrossedProduct, associativity_via_condition_x
from .dsl import (ActionDecl, AlgebraDecl, Command, FieldDecl, GlobalDecl, GroupDecl, IdealDecl,
                  SpecDocument, SpecError, parse_element, parse_spec)
from .envelope import (EnvelopingAction, build_enveloping, compare_envelopings, embed_crossed,
                       has_enveloping, morita_context, verify_enveloping)
from .exactfield import QQ, GF, Field, LinearMap, Subspace, solve_linear
from .groups import Group, GroupError, cyclic, from_table, klein_four, symmetric
from .multiplier import is_lr_associative, multiplier_algebra, phi_embedding, psi_from_ambient
from .paction import (ActionError, GlobalAction, PartialAction, Restriction, condition_x_check,
                      restrict_global, triangular_slice, unit_family)
from .preps import (elementary_grading, elementary_rep, epsilon_family, partial_semigroup, semigroup_size,
                    iso_bis, kpar_iso, rewriting_oracle, transitivity_witness)

SCHEMA_VERSION = 1


# -- elaboration -------------------------------------------------------------

@dataclass
class Environment:
    field: Field
    groups: dict[str, Group] = field(default_factory=dict)
    algebras: dict[str, Algebra] = field(default_factory=dict)
    ideals: dict[str, Ideal] = field(default_factory=dict)
    globals: dict[str, GlobalAction] = field(default_factory=dict)
    actions: dict[str, PartialAction] = field(default_factory=dict)
    restrictions: dict[str, Restriction] = field(default_factory=dict)


def elaborate(doc: SpecDocument) -> Environment:
    """Build every declared object; errors carry the declaration's position."""
    fd = doc.field
    env = Environment(QQ if fd.p is None else GF(fd.p))
    for s in doc.statements:
        if isinstance(s, (FieldDecl, Command)):
            continue
        try:
            _ELABORATE[type(s)](env, s)
        except SpecError:
            raise
        except (ValueError, AlgebraError, GroupError) as exc:
            raise SpecError(str(exc), s.line, s.col) from None
    return env


def _element(A, text: str, field: Field) -> tuple:
    return parse_element(text, A.names, field)


def _group(env: Environment, s: GroupDecl):
    if s.kind == "cyclic":
        G = cyclic(s.n)
    elif s.kind == "sym":
        G = symmetric(s.n)
    elif s.kind == "klein":
        G = klein_four()
    else:
        labels = s.labels or (s.rows[0] if s.rows else ())
        n = len(labels)
        if len(s.rows) != n or any(len(r) != n for r in s.rows):
            raise ValueError(f"a table on {n} labels needs {n} rows of {n} entries")
        pos = {x: k for k, x in enumerate(labels)}
        unknown = [x for r in s.rows for x in r if x not in pos]
        if unknown:
            raise ValueError(f"unknown label '{unknown[0]}' in table")
        G = from_table(labels, [[pos[x] for x in r] for r in s.rows])
    env.groups[s.name] = G


_PAIR_LIST = re.compile(r"^\s*[^\s:,]+\s*:\s*[^\s:,]+(\s*,\s*[^\s:,]+\s*:\s*[^\s:,]+)*\s*$")


def _algebra(env: Environment, s: AlgebraDecl):
    F = env.field
    if s.kind == "matrix":
        A = matrix_algebra(F, s.n, env.groups[s.over] if s.over else None)
    elif s.kind == "upper":
        A = upper_triangular(F, s.n)
    elif s.kind == "product":
        A = product_field(F, s.n)
    elif s.kind == "group_algebra":
        A = group_algebra(F, env.groups[s.over])
    elif s.kind == "counter":
        A = counterexample_algebra(F)
    else:
        A = _constants(F, s)
    env.algebras[s.name] = A


def _constants(F: Field, s: AlgebraDecl) -> Algebra:
    n = s.n
    names = list(s.basis) if s.basis else [f"e{k + 1}" for k in range(n)]
    if len(names) != n:
        raise ValueError(f"basis has {len(names)} names but dimension is {n}")

    def index(tok: str) -> int:
        if tok in names:
            return names.index(tok)
        if tok.isdigit() and 1 <= int(tok) <= n:
            return int(tok) - 1
        raise ValueError(f"basis index '{tok}' out of range 1..{n}")

    consts = {}
    for i, j, val in s.products:
        key = (index(i), index(j))
        if _PAIR_LIST.match(val):
            v = [F.zero] * n
            for part in val.split(","):
                k, c = part.split(":")
                v[index(k.strip())] += F(c.strip())
            vec = tuple(v)
        else:
            vec = parse_element(val, names, F)
        if key in consts:
            raise ValueError(f"product {i} {j} given twice")
        consts[key] = vec
    unit = parse_element(s.unit, names, F) if s.unit else None
    return Algebra(F, n, consts, names, unit=unit)


def _ideal(env: Environment, s: IdealDecl):
    A = env.algebras[s.algebra]
    vecs = [_element(A, e, env.field) for e in s.elements]
    env.ideals[s.name] = Ideal.span(A, vecs) if s.kind == "span" else ideal_generated(A, vecs)


def _linear_from_pairs(F: Field, A, pairs, space: Subspace, label: str) -> Callable:
    """The linear map on ``space`` sending each x to y, checked for consistency and coverage."""
    xs = [_element(A, x, F) for x, _ in pairs]
    ys = [_element(A, y, F) for _, y in pairs]
    for x, (xt, _) in zip(xs, pairs):
        if x not in space:
            raise ValueError(f"map for {label}: '{xt}' is outside the domain")
    if Subspace(F, A.dim, xs) != space:
        raise ValueError(f"map for {label}: the sources do not span the domain (dim {space.dim})")
    images = {}
    for b in space.basis:
        sol = solve_linear(F, [list(r) for r in zip(*xs)], b)
        images[b] = tuple(sum((c * y[k] for c, y in zip(sol.particular, ys)), F.zero)
                          for k in range(A.dim))

    def f(v):
        c = space.coords(tuple(v))
        out = [F.zero] * A.dim
        for coef, b in zip(c, space.basis):
            for k, y in enumerate(images[b]):
                out[k] += coef * y
        return tuple(out)

    for x, y, (xt, yt) in zip(xs, ys, pairs):
        if f(x) != y:
            raise ValueError(f"map for {label}: the pairs are inconsistent at '{xt} -> {yt}'")
    return f


def _group_key(G: Group, label: str, node) -> int:
    try:
        return G.index(label)
    except (GroupError, KeyError, ValueError):
        raise SpecError(f"'{label}' is not an element of the group", node.line, node.col) from None


def _global(env: Environment, s: GlobalDecl):
    G, B, F = env.groups[s.group], env.algebras[s.algebra], env.field
    whole = Subspace.full(F, B.dim)
    maps = {}
    for e in s.entries:
        g = _group_key(G, e.element, e)
        f = (lambda v: tuple(v)) if e.identity else _linear_from_pairs(F, B, e.pairs, whole, e.element)
        maps[g] = LinearMap(F, B.dim, B.dim, [f(b) for b in B.basis()])
    beta = GlobalAction(G, B, maps)
    v = beta.verify()
    if not v:
        raise ValueError(f"not a global action: {v.witness}")
    env.globals[s.name] = beta


def _action(env: Environment, s: ActionDecl):
    if s.kind == "restrict":
        r = restrict_global(env.globals[s.source], env.ideals[s.ideal])
        env.actions[s.name] = r.action
        env.restrictions[s.name] = r
        return
    if s.kind == "global":
        env.actions[s.name] = env.globals[s.source].as_partial()
        return
    G, A, F = env.groups[s.group], env.algebras[s.algebra], env.field
    domains, maps = {}, {}
    for e in s.entries:
        g = _group_key(G, e.element, e)
        if g in domains:
            raise SpecError(f"element '{e.element}' listed twice", e.line, e.col)
        D = env.ideals[e.ideal] if e.ideal else Ideal.whole(A)
        if D.parent is not A:
            raise SpecError(f"ideal '{e.ideal}' does not belong to '{s.algebra}'", e.line, e.col)
        domains[g] = D
    for e in s.entries:
        g = _group_key(G, e.element, e)
        src = domains.get(G.inv(g), Ideal.whole(A) if G.inv(g) == 0 else Ideal.zero(A))
        try:
            maps[g] = (lambda v: tuple(v)) if e.identity else \
                _linear_from_pairs(F, A, e.pairs, src.space, e.element)
        except ValueError as exc:
            raise SpecError(str(exc), e.line, e.col) from None
    env.actions[s.name] = PartialAction.from_ambient(G, A, domains, maps)


_ELABORATE = {GroupDecl: _group, AlgebraDecl: _algebra, IdealDecl: _ideal, GlobalDecl: _global,
              ActionDecl: _action}


# -- commands ----------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return str(x)


def _subset(arg: str) -> list[str]:
    return [x.strip() for x in arg[1:-1].split(",") if x.strip()]


def _c_verify(env, pa: PartialAction, args):
    r = pa.report()
    G = pa.group
    return {"valid": r.ok, "original_axioms": r.original_ok, "strong_axioms": r.strong_ok,
            "morphisms": r.morphisms_ok, "domain_dims": {G.label(g): pa.domains[g].dim for g in G},
            "violations": [str(v) for v in r.violations]}


def _c_crossed(env, pa: PartialAction, args):
    cp = CrossedProduct(pa)
    v = cp.is_associative()
    return {"dim": cp.dim, "basis": list(cp.names), "associative": v.ok, "witness": v.witness}


def _crossed_element(cp: CrossedProduct, text: str) -> tuple:
    """Terms like ``t@1 + 2*u@g``: a base element placed at a group element."""
    pa = cp.action
    G, A, F = pa.group, pa.base, cp.field
    names = [f"{a}@{G.label(g)}" for g in G for a in A.names]
    flat = parse_element(text, names, F)
    terms = []
    for g in G:
        a = flat[g * A.dim: (g + 1) * A.dim]
        if any(a):
            if a not in pa.domains[g].space:
                raise ActionError(f"{A.format(a)} is not in D_{G.label(g)}")
            terms.append((g, a))
    return cp.combination(terms)


def _c_assoc(env, pa: PartialAction, args):
    cp = CrossedProduct(pa)
    v = cp.is_associative()
    cx = associativity_via_condition_x(pa)
    out = {"associative": v.ok, "witness": v.witness, "condition_x": cx.ok,
           "condition_x_witness": cx.witness, "agree": v.ok == cx.ok}
    if len(args) > 1 and args[1] == "cube":
        x = _crossed_element(cp, " ".join(args[2:]))
        xx = cp.mul(x, x)
        left, right = cp.mul(xx, x), cp.mul(x, xx)
        out["cube"] = {"x": cp.describe(x), "(xx)x": cp.describe(left), "x(xx)": cp.describe(right),
                       "equal": left == right}
    return out


def _c_multipliers(env, I, args):
    A = I.algebra if isinstance(I, Ideal) else I
    M = multiplier_algebra(A)
    emb = phi_embedding(A)
    out = {"dim": A.dim, "dim_multiplier": M.dim, "phi_kernel_dim": emb.kernel.dim,
           "phi_image_dim": emb.image.dim, "phi_image_is_ideal": True,
           "phi_injective": emb.injective, "phi_bijective": emb.bijective}
    if isinstance(I, Ideal):
        psi = psi_from_ambient(I.parent, I)
        out["psi_kernel_dim"] = psi.kernel.dim
    return out


def _c_lr_assoc(env, I, args):
    A = I.algebra if isinstance(I, Ideal) else I
    v = is_lr_associative(A)
    return {"lr_associative": v.ok, "witness": v.witness, "detail": v.detail}


def _c_semiprime(env, A: Algebra, args):
    return {"dim": A.dim, "semiprime": is_semiprime(A)}


def _original_enveloping(env, name: str, pa: PartialAction):
    r = env.restrictions.get(name)
    if r is None:
        return None
    beta = next(b for b in env.globals.values() if b.algebra is r.ideal.parent)
    phi = AlgebraMorphism(pa.base, beta.algebra, r.inclusion)
    return EnvelopingAction(pa, beta, phi), r.admissible


def _c_envelope(env, pa: PartialAction, args):
    if not has_enveloping(pa):
        return {"has_enveloping": False, "missing_units": unit_family(pa).missing}
    E = build_enveloping(pa)
    rep = verify_enveloping(pa, E.beta, E.phi)
    emb = embed_crossed(pa, E)
    out = {"has_enveloping": True, "dim_B": E.algebra.dim, "verified": rep.ok,
           "dim_crossed": emb.source.dim, "dim_enveloping_crossed": emb.target.dim,
           "embedding_injective": emb.morphism.map.is_injective(), "embedding_image_dim": emb.image.dim}
    orig = _original_enveloping(env, args[0], pa)
    if orig is not None:
        E0, admissible = orig
        out["original_admissible"] = admissible
        out["original_verified"] = verify_enveloping(pa, E0.beta, E0.phi).ok
        if admissible:
            iso = compare_envelopings(pa, E, E0)
            out["isomorphic_to_original"] = verify_isomorphism(iso).ok
    return out


def _c_morita(env, pa: PartialAction, args):
    mc = morita_context(pa, build_enveloping(pa))
    return {"ok": mc.ok, "dims": mc.dims, "checks": mc.checks}


def _c_kpar(env, G: Group, args):
    F = env.field
    kp = partial_semigroup(G, F)
    oracle = rewriting_oracle(G)
    ki = kpar_iso(G, F)
    return {"order": G.order, "size_S": len(kp.semigroup), "expected_size": semigroup_size(G.order),
            "dim_kpar": kp.dim, "oracle_size": oracle.size, "oracle_ok": oracle.ok, "iso": ki.ok,
            "psi_phi_identity": ki.psi_phi_identity, "phi_psi_identity": ki.phi_psi_identity,
            "telescoping": ki.telescoping_ok}


def _elementary_parts(env, G: Group, args):
    erd = elementary_rep(G, _subset(args[1]), env.field)
    return erd, iso_bis(erd)


def _c_elementary(env, G: Group, args):
    erd, ib = _elementary_parts(env, G, args)
    ind = ib.phi.induced
    eps = epsilon_family(erd.pi)
    n = erd.n
    trans = {f"{i},{j}": transitivity_witness(erd, i, j, ind)
             for i in range(1, n + 1) for j in range(1, n + 1)}
    gr = elementary_grading(erd, ib)
    return {"n": n, "H": [G.label(h) for h in erd.h_elements],
            "translates": [G.format_subset(T) for T in erd.orbit.translates],
            "representatives": [G.label(g) for g in erd.representatives],
            "target": erd.target_name(), "dim_target": erd.target.dim, "iso": ib.iso,
            "surjective": ib.surjective, "expectation_applicable": ib.expectation.applicable,
            "injective": ib.expectation.injective,
            "epsilon": {G.label(g): erd.target.format(eps.eps[g]) for g in G},
            "transitivity": trans, "grading": gr.degrees, "graded": gr.ok}


def _c_grading(env, G: Group, args):
    erd, ib = _elementary_parts(env, G, args)
    gr = elementary_grading(erd, ib)
    return {"degrees": gr.degrees, "homogeneous_images": gr.homogeneous_images,
            "multiplicative": gr.multiplicative, "graded_iso": gr.ok and ib.iso}


def _c_condition_x(env, target, args):
    if args[0] == "triangular":
        v = condition_x_check(triangular_slice(env.field, int(args[1])))
        where = None
    elif len(args) == 2:
        pa = target
        g = pa.group.index(args[1])
        pa.require_valid()
        v = condition_x_check(pa.slice(g))
        where = args[1]
    else:
        v = associativity_via_condition_x(target)
        where = v.witness[0] if v.witness else None
    out = {"holds": v.ok, "witness": v.witness}
    if not v.ok:
        out["at"] = where
        out["lhs"] = v.detail["lhs"]
        out["rhs"] = v.detail["rhs"]
    return out


_COMMANDS = {
    "verify": _c_verify, "crossed": _c_crossed, "assoc": _c_assoc, "multipliers": _c_multipliers,
    "lr_assoc": _c_lr_assoc, "semiprime": _c_semiprime, "envelope": _c_envelope,
    "morita": _c_morita, "kpar": _c_kpar, "elementary": _c_elementary, "grading": _c_grading,
    "condition_x": _c_condition_x,
}


# -- reports -----------------------------------------------------------------

@dataclass
class Report:
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["status"] == "ok" for r in self.results)

    def as_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "results": self.results}


def _lookup(result: dict, key: str):
    cur = result
    for part in key.split("."):
        if not isinstance(cur, dict) or part not in cur:
            return None, False
        cur = cur[part]
    return cur, True


def _literal(text: str):
    try:
        return json.loads(text)
    except ValueError:
        return text


def _resolve(env: Environment, name: str):
    for table in (env.actions, env.ideals, env.algebras, env.groups):
        if name in table:
            return table[name]
    return None


def run(doc: SpecDocument, env: Environment | None = None) -> Report:
    """Execute the commands in order; failures are recorded per command."""
    env = env or elaborate(doc)
    report = Report()
    for c in doc.commands:
        entry = {"line": c.line, "command": c.verb, "args": list(c.args)}
        try:
            target = _resolve(env, c.args[0]) if c.args else None
            result = _jsonable(_COMMANDS[c.verb](env, target, list(c.args)))
        except (ValueError, AlgebraError, GroupError, AssertionError) as exc:
            entry.update(status="error", error=f"{type(exc).__name__}: {exc}", expectations=[])
            report.results.append(entry)
            continue
        checks = []
        for key, lit in c.expects:
            actual, found = _lookup(result, key)
            expected = _literal(lit)
            ok = found and (actual == expected or (isinstance(actual, str) and actual == lit))
            checks.append({"key": key, "expected": expected, "actual": actual, "ok": ok})
        entry["status"] = "ok" if all(x["ok"] for x in checks) else "violated"
        entry["result"] = result
        entry["expectations"] = checks
        report.results.append(entry)
    return report


def _compact(x) -> str:
    return json.dumps(x, separators=(",", ":"), ensure_ascii=False)


def emit(report: Report, format: str = "json") -> bytes:
    if format == "json":
        return _compact(report.as_dict()).encode()
    if format != "text":
        raise ValueError(f"unknown format '{format}'")
    lines = [f"schema_version {SCHEMA_VERSION}"]
    for r in report.results:
        head = " ".join([r["command"], *r["args"]])
        lines.append(f"line {r['line']}: {head} [{r['status']}]")
        if r["status"] == "error":
            lines.append(f"  error: {r['error']}")
            continue
        for k, v in r["result"].items():
            lines.append(f"  {k}: {_compact(v)}")
        for x in r["expectations"]:
            mark = "ok" if x["ok"] else f"VIOLATED (actual {_compact(x['actual'])})"
            lines.append(f"  expect {x['key']}={_compact(x['expected'])}: {mark}")
    return ("\n".join(lines) + "\n").encode()


# -- entry point -------------------------------------------------------------

def threads_from_env(environ=os.environ) -> int:
    raw = environ.get("PACT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise SpecError(f"PACT_THREADS must be a positive integer, got '{raw}'", 0, 0) from None
    if n < 1:
        raise SpecError(f"PACT_THREADS must be a positive integer, got '{raw}'", 0, 0)
    return n


def _load(path: str) -> tuple[SpecDocument, Environment]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    doc = parse_spec(text)
    return doc, elaborate(doc)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="pact", description="Partial actions on finite-dimensional algebras")
    sub = ap.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="execute the commands of a description file")
    r.add_argument("file")
    r.add_argument("--format", choices=("json", "text"), default="json")
    r.add_argument("--out")
    c = sub.add_parser("check", help="parse and build the declarations without running commands")
    c.add_argument("file")
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        threads_from_env()
        doc, env = _load(args.file)
    except SpecError as exc:
        where = f"{args.file}:{exc.line}:{exc.col}" if exc.line else args.file
        print(f"{where}: error: {exc.message}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"pact: {exc}", file=sys.stderr)
        return 2
    if args.cmd == "check":
        print(f"{args.file}: ok ({len(doc.statements)} statements, {len(doc.commands)} commands)")
        return 0
    report = run(doc, env)
    data = emit(report, args.format)
    if args.format == "json":
        data += b"\n"
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
