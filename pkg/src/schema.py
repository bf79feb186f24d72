"""
JSON output models.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel

from .burnside import BurnsideElem
from .grading import Grading
from .hpoint import UNIT
from .ring import Mono, RingElem, render_mono


class GradingModel(BaseModel):
    u: int
    s: int
    w: int


class BurnsideModel(BaseModel):
    a: int
    b: int


class CoeffModel(BaseModel):
    symbol: str
    value: Union[int, BurnsideModel]


class MonomialModel(BaseModel):
    a: int
    b: int
    i: int
    j: int
    m: Optional[int] = None


class TermModel(BaseModel):
    coeff: CoeffModel
    monomial: MonomialModel


class ElementModel(BaseModel):
    space: str
    grading: Optional[GradingModel] = None
    terms: list[TermModel]
    text: str


class BasisEntryModel(BaseModel):
    monomial: MonomialModel
    text: str
    grading: GradingModel


class BasisModel(BaseModel):
    space: str
    coset: Optional[int] = None
    elements: list[BasisEntryModel]


class IdentityResultModel(BaseModel):
    name: str
    holds: bool


class IdentitySuiteModel(BaseModel):
    results: list[IdentityResultModel]
    passed: int
    failed: int


class LinesReportModel(BaseModel):
    euler: str
    coefficient: BurnsideModel
    counts: dict[str, int]
    line_types: dict[str, str]
    c2_set: str
    total: int
    representatives: dict[str, str]
    trace: list[str] = []


def grading_model(g: Grading) -> GradingModel:
    return GradingModel(u=g.u, s=g.s, w=g.w)


def burnside_model(x: BurnsideElem) -> BurnsideModel:
    return BurnsideModel(a=x.a, b=x.b)


def monomial_model(mono: Mono) -> MonomialModel:
    return MonomialModel(a=mono.a, b=mono.b, i=mono.i, j=mono.j, m=mono.m)


def element_model(x: RingElem) -> ElementModel:
    terms = []
    for mono, coeff in x.terms.items():
        for sym, c in coeff.items():
            value = burnside_model(c) if sym == UNIT else c
            terms.append(TermModel(coeff=CoeffModel(symbol=sym.render(), value=value), monomial=monomial_model(mono)))
    g = x.grading
    return ElementModel(
        space=x.space.tag,
        grading=None if g is None else grading_model(g),
        terms=terms,
        text=x.render(),
    )


def basis_model(space_tag: str, monos: list[tuple[Mono, Grading]], coset: int | None = None, space=None) -> BasisModel:
    return BasisModel(
        space=space_tag,
        coset=coset,
        elements=[
            BasisEntryModel(monomial=monomial_model(mono), text=render_mono(mono, space), grading=grading_model(g))
            for mono, g in monos
        ],
    )


class GradingInfoModel(BaseModel):
    grading: Optional[GradingModel] = None
    text: str
    rank: Optional[int] = None
    fixed_dims: Optional[list[int]] = None
    coset: Optional[int] = None


class ImageModel(BaseModel):
    space: str
    map: str
    text: str
    degree: Optional[int] = None
    tags: Optional[list[int]] = None
