"""FastMCP server exposing the semistab classifications.

Every tool takes a pydantic request and returns the same report model the CLI
renders as JSON, so MCP clients receive exact "p/q" fractions.
"""

import asyncio
import os
import sys
from typing import Literal, Optional

from fastmcp import Context, FastMCP
from pydantic import BaseModel, Field

# after the fastmcp import, so src/mcp cannot shadow the installed mcp package
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import Config  # noqa: E402
from main import run_verify  # noqa: E402
from models import CoxeterTableModel, MinimalSetModel, VerifyModel, WeightsModel  # noqa: E402
from services.coxfeas import classify_all  # noqa: E402
from services.render import coxeter_model, minimal_model, weights_model  # noqa: E402
from services.rootsys import build  # noqa: E402
from services.ssgit import minimal_set_report  # noqa: E402


# Global configuration
global_config = Config()


mcp = FastMCP(
    name="semistab",
    version="0.1.0",
    instructions="""
semistab decides which Schubert varieties admit torus-semistable points.

A Schubert variety X(w) has a semistable point for the line bundle of a dominant
root-lattice weight chi iff w(chi) <= 0 in the simple-root basis. The tools compute
Bruhat-minimal such w in maximal parabolic quotients of types A-D, classify the
admitting Coxeter elements of every simple type, and run the verification suites.
Root systems use Bourbaki labeling; weights are exact fractions in the simple-root basis.
""",
)


# ============================================================================
# Tool: weights
# ============================================================================

class SystemRequest(BaseModel):
    """A simple root system."""
    kind: str = Field(description="Cartan type, one of A B C D E F G")
    rank: int = Field(description="Rank n (A>=1, B,C>=2, D>=3, E 6-8, F 4, G 2)")


@mcp.tool(name="weights")
async def weights(request: SystemRequest, ctx: Context) -> WeightsModel:
    """Fundamental weights, their clearing factors and the highest root."""
    try:
        await ctx.info(f"Building {request.kind}{request.rank}")
        return weights_model(build(request.kind, request.rank, global_config.root_max_rank))
    except Exception as e:
        await ctx.error(f"Failed to build root system: {str(e)}")
        raise


# ============================================================================
# Tool: minimal
# ============================================================================

class MinimalRequest(SystemRequest):
    """Minimal admitting elements of W^{I_r}."""
    r: int = Field(description="Index of the fundamental weight, 1 <= r <= rank")
    limit: Optional[int] = Field(default=None, description="Largest Weyl group order to enumerate")


@mcp.tool(name="minimal")
async def minimal(request: MinimalRequest, ctx: Context) -> MinimalSetModel:
    """Bruhat-minimal w in W^{I_r} with w(varpi_r) <= 0, compared with the closed form."""
    try:
        rs = build(request.kind, request.rank, global_config.root_max_rank)
        limit = request.limit or global_config.enum_limit
        await ctx.info(f"Enumerating W^I for {rs.label}, r={request.r}")
        report = await asyncio.to_thread(minimal_set_report, rs, request.r, limit, global_config.workers)
        await ctx.info(f"{len(report.entries)} minimal elements, match={report.match}")
        return minimal_model(report)
    except Exception as e:
        await ctx.error(f"Failed to compute minimal set: {str(e)}")
        raise


# ============================================================================
# Tool: coxeter
# ============================================================================

@mcp.tool(name="coxeter")
async def coxeter(request: SystemRequest, ctx: Context) -> CoxeterTableModel:
    """Admitting Coxeter elements with integer witnesses and the closed-form comparison."""
    try:
        rs = build(request.kind, request.rank, global_config.root_max_rank)
        await ctx.info(f"Classifying Coxeter elements of {rs.label}")
        reports = await asyncio.to_thread(
            classify_all, rs, global_config.workers, global_config.coxeter_max_rank
        )
        model = coxeter_model(rs, reports)
        await ctx.info(f"{sum(1 for e in model.entries if e.admits)} of {len(model.entries)} admit")
        return model
    except Exception as e:
        await ctx.error(f"Failed to classify Coxeter elements: {str(e)}")
        raise


# ============================================================================
# Tool: verify
# ============================================================================

class VerifyRequest(BaseModel):
    """A verification run."""
    suite: Literal["pairing-bound", "prop31", "thm32", "thm42", "invariants", "witnesses", "all"] = Field(
        description="Suite to run"
    )
    max_rank: int = Field(default=4, description="Rank ceiling")


@mcp.tool(name="verify")
async def verify(request: VerifyRequest, ctx: Context) -> VerifyModel:
    """Run a verification suite and return per-instance results."""
    try:
        await ctx.info(f"Running {request.suite} up to rank {request.max_rank}")
        result = await asyncio.to_thread(run_verify, global_config, request.suite, request.max_rank)
        await ctx.info(f"passed={result.passed}")
        return result
    except Exception as e:
        await ctx.error(f"Verification failed to run: {str(e)}")
        raise


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="semistab FastMCP server")
    parser.add_argument(
        "--transport",
        choices=["stdio", "http"],
        default="http",
        help="Transport method (default: http)"
    )
    parser.add_argument(
        "--port",
        type=int,
        default=7860,
        help="Port for HTTP transport (default: 7860)"
    )
    parser.add_argument(
        "--host",
        default="localhost",
        help="Host for HTTP transport (default: localhost)"
    )

    args = parser.parse_args()

    if args.transport == "stdio":
        mcp.run("stdio")
    else:
        uvicorn_config = {"ws": "websockets"}
        mcp.run("http", host=args.host, port=args.port, uvicorn_config=uvicorn_config)


# run the server:
# python -m src.mcp.fastmcp_server --transport http --host 0.0.0.0 --port 7860
