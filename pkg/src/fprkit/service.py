"""Stateless JSON-over-HTTP service exposing the core operations.

Routes live under /v1 and evolve additively.  Input-range failures come
back as 400 with the offending field named; domain-infeasible requests
(reverse Bayes with l10 = 0, simulations beyond the experiment ceiling)
come back as 422.  Every handler is a pure function of the request body.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .errors import DomainError, InfeasibleError
from .panel import build_curve, build_interpret, build_prior_needed, build_simulate

DEFAULT_MAX_SIM_EXPERIMENTS = 10_000_000


class InterpretIn(BaseModel):
    p: float = Field(gt=0.0, lt=1.0)
    n_per_group: int = Field(default=16, ge=2)
    effect_size_sd: float = Field(default=1.0, ge=0.0)
    prior_h1: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)


class PriorNeededIn(BaseModel):
    p: float = Field(gt=0.0, lt=1.0)
    n_per_group: int = Field(default=16, ge=2)
    effect_size_sd: float = Field(default=1.0, ge=0.0)
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)
    target_fpr: float = Field(gt=0.0, lt=1.0)
    approach: Literal["p_equals", "p_less_than"] = "p_equals"


class CurveIn(BaseModel):
    sweep: Literal["prior", "p", "n"]
    grid: list[float] = Field(min_length=1, max_length=10_000)
    n_per_group: int = Field(default=16, ge=2)
    effect_size_sd: float = Field(default=1.0, ge=0.0)
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)
    p: float = Field(default=0.05, gt=0.0, lt=1.0)
    prior_h1: float = Field(default=0.5, ge=0.0, le=1.0)


class SimulateIn(BaseModel):
    n_per_group: int = Field(default=16, ge=2)
    effect_size_sd: float = Field(default=1.0, ge=0.0)
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)
    prior_h1: float = Field(default=0.5, ge=0.0, le=1.0)
    n_experiments: int = Field(ge=1)
    p_window: Optional[tuple[float, float]] = None
    seed: int = Field(ge=0, lt=2**64)
    n_shards: int = Field(default=1, ge=1, le=256)


def _error_body(code: str, message: str, field: Optional[str] = None) -> dict:
    err: dict = {"code": code, "message": message}
    if field is not None:
        err["field"] = field
    return {"error": err}


def create_app(
    cors_origin: str = "*",
    max_sim_experiments: int = DEFAULT_MAX_SIM_EXPERIMENTS,
) -> FastAPI:
    app = FastAPI(title="fprkit", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError):
        first = exc.errors()[0]
        loc = [str(part) for part in first.get("loc", ()) if part != "body"]
        field = ".".join(loc) if loc else None
        return JSONResponse(
            status_code=400,
            content=_error_body("validation", first.get("msg", "invalid input"), field),
        )

    @app.exception_handler(InfeasibleError)
    async def _on_infeasible(request: Request, exc: InfeasibleError):
        return JSONResponse(status_code=422, content=_error_body("infeasible", str(exc)))

    @app.exception_handler(DomainError)
    async def _on_domain(request: Request, exc: DomainError):
        return JSONResponse(status_code=400, content=_error_body("domain", str(exc)))

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/v1/interpret")
    def interpret(body: InterpretIn):
        return build_interpret(
            p=body.p,
            n_per_group=body.n_per_group,
            effect_size_sd=body.effect_size_sd,
            alpha=body.alpha,
            prior_h1=body.prior_h1,
        )

    @app.post("/v1/prior-needed")
    def prior_needed(body: PriorNeededIn):
        return build_prior_needed(
            p=body.p,
            n_per_group=body.n_per_group,
            effect_size_sd=body.effect_size_sd,
            alpha=body.alpha,
            target_fpr=body.target_fpr,
            approach=body.approach,
        )

    @app.post("/v1/curve")
    def curve_endpoint(body: CurveIn):
        return build_curve(
            sweep=body.sweep,
            grid=body.grid,
            n_per_group=body.n_per_group,
            effect_size_sd=body.effect_size_sd,
            alpha=body.alpha,
            p=body.p,
            prior_h1=body.prior_h1,
        )

    @app.post("/v1/simulate")
    def simulate_endpoint(body: SimulateIn):
        if body.n_experiments > max_sim_experiments:
            raise InfeasibleError(
                f"n_experiments {body.n_experiments} exceeds the service ceiling "
                f"{max_sim_experiments}"
            )
        return build_simulate(
            n_per_group=body.n_per_group,
            effect_size_sd=body.effect_size_sd,
            alpha=body.alpha,
            prior_h1=body.prior_h1,
            n_experiments=body.n_experiments,
            p_window=body.p_window,
            seed=body.seed,
            n_shards=body.n_shards,
        )

    return app


def run(
    host: str = "127.0.0.1",
    port: int = 8000,
    cors_origin: str = "*",
    max_sim_experiments: int = DEFAULT_MAX_SIM_EXPERIMENTS,
) -> None:
    import uvicorn

    uvicorn.run(
        create_app(cors_origin=cors_origin, max_sim_experiments=max_sim_experiments),
        host=host,
        port=port,
        log_level="warning",
    )
