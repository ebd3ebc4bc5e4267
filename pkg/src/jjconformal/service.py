"""HTTP facade over the command layer.

Every endpoint receives the definition source inline, so the service is
stateless.  Validation failures (bad syntax, unknown names, shape errors)
come back as 422 responses; mathematical verdicts, passing or failing, are
200 responses carrying the verdict body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from . import api
from .dsl import print_document
from .errors import ApiError, DslError, ShapeError
from .extending import ExtendingDatum
from .finite import FiniteAlgebra, MockGD
from .conformal import ConformalAlgebra
from .operators import ConformalBilinearForm, ModuleMap
from .reps import ConformalRep


class CheckRequest(BaseModel):
    source: str
    object: str
    property: str


class CounterexampleModel(BaseModel):
    indices: list[int]
    residual: str
    label: str | None = None


class VerdictModel(BaseModel):
    object: str
    property: str
    passed: bool
    counterexamples: list[CounterexampleModel]
    conditions: dict[str, bool] | None = None
    note: str | None = None
    millis: int


class ConstructRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    source: str
    kind: str
    from_: str = Field(alias="from")
    with_: str | None = Field(default=None, alias="with")
    name: str | None = None


class ConstructResponse(BaseModel):
    ok: bool
    name: str
    source: str | None = None
    verdict: VerdictModel | None = None


class ProductRequest(BaseModel):
    source: str
    algebra: str
    left: str
    right: str
    at: str = "L"


class ProductResponse(BaseModel):
    algebra: str
    left: str
    right: str
    at: str
    result: str


class ObjectInfo(BaseModel):
    name: str
    kind: str


class ParseRequest(BaseModel):
    source: str


class ParseResponse(BaseModel):
    objects: list[ObjectInfo]
    canonical: str


_KINDS = (
    (MockGD, "mockgd"),
    (ConformalRep, "rep"),
    (ModuleMap, "map"),
    (ConformalBilinearForm, "form"),
    (ExtendingDatum, "datum"),
    (ConformalAlgebra, "conformal"),
    (FiniteAlgebra, "algebra"),
)


def _kind_of(obj) -> str:
    for cls, kind in _KINDS:
        if isinstance(obj, cls):
            return kind
    return "unknown"


app = FastAPI(title="jjconformal", version="0.1.0")


@app.exception_handler(DslError)
async def _dsl_error(request: Request, exc: DslError):
    return JSONResponse(
        status_code=422,
        content={"detail": str(exc), "line": exc.line, "column": exc.column},
    )


@app.exception_handler(ApiError)
async def _api_error(request: Request, exc: ApiError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ShapeError)
async def _shape_error(request: Request, exc: ShapeError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/parse", response_model=ParseResponse)
def parse(req: ParseRequest) -> ParseResponse:
    doc = api.load_document(req.source)
    infos = [
        ObjectInfo(name=name, kind=_kind_of(obj)) for name, obj in doc.objects.items()
    ]
    return ParseResponse(objects=infos, canonical=print_document(doc))


@app.post("/check", response_model=VerdictModel, response_model_exclude_none=True)
def check(req: CheckRequest) -> VerdictModel:
    doc = api.load_document(req.source)
    return VerdictModel(**api.run_check(doc, req.object, req.property))


@app.post(
    "/construct", response_model=ConstructResponse, response_model_exclude_none=True
)
def construct(req: ConstructRequest) -> ConstructResponse:
    doc = api.load_document(req.source)
    result = api.run_construct(doc, req.kind, req.from_, req.with_, req.name)
    return ConstructResponse(**result)


@app.post("/product", response_model=ProductResponse)
def product(req: ProductRequest) -> ProductResponse:
    doc = api.load_document(req.source)
    return ProductResponse(**api.run_product(doc, req.algebra, req.left, req.right, req.at))
