"""Report models and their text, JSON and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Optional, Sequence

from pydantic import BaseModel

from models import (
    CoxeterRowModel,
    CoxeterTableModel,
    EntryModel,
    ExpectedModel,
    FundamentalWeightModel,
    MinimalSetModel,
    SystemModel,
    VerifyModel,
    WeightsModel,
)
from services.coxfeas import CoxeterReport, pattern_words
from services.rootsys import (
    RootSystem,
    clearing_factor,
    fundamental_weights,
    highest_root,
    root_data,
    weyl_group_order,
)
from services.ssgit import MinimalSetReport
from utils import frac_str

FORMATS = ("text", "json", "csv")


def _fracs(chi: Optional[Sequence]) -> Optional[List[str]]:
    return None if chi is None else [frac_str(x) for x in chi]


def system_model(rs: RootSystem) -> SystemModel:
    return SystemModel(kind=rs.kind, rank=rs.rank)


def minimal_model(report: MinimalSetReport) -> MinimalSetModel:
    exp = report.expected
    expected = ExpectedModel(
        case=exp.case if exp else "",
        silent=exp.silent if exp else True,
        scale=exp.scale if exp else report.scale,
        weights=[_fracs(chi) for chi in exp.weights] if exp else [],
        word=list(exp.word) if exp and exp.word is not None else None,
    )
    return MinimalSetModel(
        system=system_model(report.system),
        r=report.r,
        scale=report.scale,
        coset_count=report.coset_count,
        admitting_count=report.admitting_count,
        entries=[EntryModel(word=list(w.word), weight=_fracs(chi)) for w, chi in report.entries],
        expected=expected,
        match=report.match,
        mismatches=list(report.mismatches),
    )


def coxeter_row(report: CoxeterReport) -> CoxeterRowModel:
    return CoxeterRowModel(
        word=list(report.element.word),
        lemma41=report.passes_lemma41,
        admits=report.admits,
        witness=_fracs(report.witness),
        expected=report.expected.admits,
        biconditional=report.expected.biconditional,
        rule=report.expected.rule,
        agreement=report.agreement,
        d4_length_condition=report.d4_length_condition,
        grid_agrees=report.grid_agrees,
    )


def coxeter_model(rs: RootSystem, reports: Iterable[CoxeterReport]) -> CoxeterTableModel:
    rows = [coxeter_row(rep) for rep in reports]
    return CoxeterTableModel(
        system=system_model(rs),
        entries=rows,
        pattern_words=[list(word) for word in pattern_words(rs)],
        all_agree=all(row.agreement for row in rows),
    )


def weights_model(rs: RootSystem) -> WeightsModel:
    return WeightsModel(
        system=system_model(rs),
        fundamental_weights=[
            FundamentalWeightModel(r=r, weight=_fracs(varpi), clearing_factor=clearing_factor(varpi))
            for r, varpi in enumerate(fundamental_weights(rs), start=1)
        ],
        highest_root=_fracs(highest_root(rs)),
        positive_root_count=len(root_data(rs)),
        weyl_group_order=weyl_group_order(rs.kind, rs.rank),
    )


# ----------------------------------------------------------------------
# emitters
# ----------------------------------------------------------------------

def to_json(model: BaseModel) -> str:
    """Canonical JSON: sorted keys, two-space indent."""
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2)


def format_table(headers: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Left-aligned columns padded to the widest cell."""
    rows_list: List[List[str]] = [["" if c is None else str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in rows_list:
        for idx, cell in enumerate(row):
            widths[idx] = max(widths[idx], len(cell))
    header_line = "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()
    body = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows_list]
    return "\n".join([header_line, "-" * len(header_line)] + body)


def _word(word: Optional[Sequence[int]]) -> str:
    if word is None:
        return ""
    return "".join(f"s{i}" for i in word) or "e"


def _vec(chi: Optional[Sequence[str]]) -> str:
    return "" if chi is None else "(" + ", ".join(chi) + ")"


def _flag(value: Optional[bool]) -> str:
    return "-" if value is None else ("yes" if value else "no")


def _table(model: BaseModel):
    """(title lines, headers, rows, footer lines) of a report."""
    if isinstance(model, MinimalSetModel):
        label = f"{model.system.kind}{model.system.rank}"
        title = [
            f"{label} r={model.r}: {len(model.entries)} minimal of {model.admitting_count} admitting "
            f"among {model.coset_count} coset representatives (scale {model.scale})"
        ]
        rows = [[_word(e.word), _vec(e.weight)] for e in model.entries]
        if model.expected.silent:
            footer = [f"expected: theorem-silent ({model.expected.case})"]
        else:
            footer = [f"expected: {model.expected.case}, {len(model.expected.weights)} weights"]
            if model.expected.word is not None:
                footer.append(f"explicit word: {_word(model.expected.word)}")
        footer.append(f"match: {_flag(model.match)}")
        footer += [f"  {m}" for m in model.mismatches]
        return title, ["word", "weight"], rows, footer
    if isinstance(model, CoxeterTableModel):
        label = f"{model.system.kind}{model.system.rank}"
        admitting = sum(1 for e in model.entries if e.admits)
        title = [f"{label}: {len(model.entries)} Coxeter elements, {admitting} admit"]
        headers = ["word", "lemma41", "admits", "witness", "expected", "agree"]
        with_d4 = any(e.d4_length_condition is not None for e in model.entries)
        with_grid = any(e.grid_agrees is not None for e in model.entries)
        headers += ["l(ws2)>l(w)"] if with_d4 else []
        headers += ["grid"] if with_grid else []
        rows = []
        for e in model.entries:
            row = [_word(e.word), _flag(e.lemma41), _flag(e.admits), _vec(e.witness), _flag(e.expected), _flag(e.agreement)]
            row += [_flag(e.d4_length_condition)] if with_d4 else []
            row += [_flag(e.grid_agrees)] if with_grid else []
            rows.append(row)
        rule = model.entries[0].rule if model.entries else ""
        footer = [f"rule: {rule}", f"all agree: {_flag(model.all_agree)}"]
        return title, headers, rows, footer
    if isinstance(model, VerifyModel):
        rows = []
        footer = []
        for s in model.suites:
            failed = [i for i in s.instances if not i.passed]
            rows.append([s.suite, len(s.instances), len(failed), _flag(s.passed)])
            for i in failed:
                where = f"{i.kind}{i.rank}" + (f" r={i.r}" if i.r is not None else "")
                footer.append(f"  FAIL {s.suite} {where} {_word(i.element)} {i.detail}".rstrip())
        footer.append(f"passed: {_flag(model.passed)}")
        return [f"verify {model.suite} (max rank {model.max_rank})"], ["suite", "instances", "failed", "passed"], rows, footer
    if isinstance(model, WeightsModel):
        label = f"{model.system.kind}{model.system.rank}"
        title = [f"{label}: |W| = {model.weyl_group_order}, {model.positive_root_count} positive roots"]
        rows = [[f.r, _vec(f.weight), f.clearing_factor] for f in model.fundamental_weights]
        footer = [f"highest root: {_vec(model.highest_root)}"]
        return title, ["r", "fundamental weight", "k"], rows, footer
    raise TypeError(f"no table layout for {type(model).__name__}")


def to_text(model: BaseModel) -> str:
    title, headers, rows, footer = _table(model)
    return "\n".join(title + [format_table(headers, rows)] + footer)


def _csv_rows(model: BaseModel):
    space = " ".join
    if isinstance(model, MinimalSetModel):
        headers = ["kind", "rank", "r", "word", "weight", "match"]
        rows = [
            [model.system.kind, model.system.rank, model.r, space(map(str, e.word)), space(e.weight), _flag(model.match)]
            for e in model.entries
        ]
    elif isinstance(model, CoxeterTableModel):
        headers = ["kind", "rank", "word", "lemma41", "admits", "witness", "expected", "agreement"]
        rows = [
            [
                model.system.kind, model.system.rank, space(map(str, e.word)), _flag(e.lemma41), _flag(e.admits),
                space(e.witness or []), _flag(e.expected), _flag(e.agreement),
            ]
            for e in model.entries
        ]
    elif isinstance(model, VerifyModel):
        headers = ["suite", "kind", "rank", "r", "element", "passed", "detail"]
        rows = [
            [s.suite, i.kind, i.rank, "" if i.r is None else i.r, space(map(str, i.element or [])), _flag(i.passed), i.detail]
            for s in model.suites
            for i in s.instances
        ]
    elif isinstance(model, WeightsModel):
        headers = ["kind", "rank", "r", "weight", "clearing_factor"]
        rows = [
            [model.system.kind, model.system.rank, f.r, space(f.weight), f.clearing_factor]
            for f in model.fundamental_weights
        ]
    else:
        raise TypeError(f"no csv layout for {type(model).__name__}")
    return headers, rows


def to_csv(model: BaseModel) -> str:
    headers, rows = _csv_rows(model)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render(model: BaseModel, fmt: str = "text") -> str:
    if fmt == "json":
        return to_json(model)
    if fmt == "csv":
        return to_csv(model)
    if fmt == "text":
        return to_text(model)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
