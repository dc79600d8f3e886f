"""MCP tools, exercised through an in-memory FastMCP client."""

import asyncio
import sys
from pathlib import Path

import pytest
from fastmcp import Client
from fastmcp.exceptions import ToolError

# Add repository root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.mcp.fastmcp_server import mcp  # noqa: E402


def call(tool, request):
    async def _call():
        async with Client(mcp) as client:
            response = await client.call_tool(tool, {"request": request})
            return response.structured_content or response.data or {}

    return asyncio.run(_call())


def test_tools_are_registered():
    async def _names():
        async with Client(mcp) as client:
            return {tool.name for tool in await client.list_tools()}

    assert asyncio.run(_names()) == {"weights", "minimal", "coxeter", "verify"}


def test_weights_tool():
    data = call("weights", {"kind": "B", "rank": 3})
    assert data["system"] == {"kind": "B", "rank": 3}
    assert data["fundamental_weights"][2]["weight"] == ["1/2", "1", "3/2"]
    assert data["weyl_group_order"] == 48


def test_minimal_tool():
    data = call("minimal", {"kind": "B", "rank": 3, "r": 1})
    assert data["match"] is True
    assert [e["word"] for e in data["entries"]] == [[3, 2, 1]]
    assert data["entries"][0]["weight"] == ["0", "0", "-1"]


def test_coxeter_tool():
    data = call("coxeter", {"kind": "A", "rank": 3})
    assert len(data["entries"]) == 4
    assert all(e["admits"] for e in data["entries"])
    assert data["all_agree"] is True


def test_verify_tool():
    data = call("verify", {"suite": "pairing-bound", "max_rank": 3})
    assert data["passed"] is True
    assert data["suites"][0]["suite"] == "pairing-bound"


def test_invalid_system_is_a_tool_error():
    with pytest.raises(ToolError):
        call("weights", {"kind": "E", "rank": 5})


def test_limit_is_a_tool_error():
    with pytest.raises(ToolError):
        call("minimal", {"kind": "B", "rank": 4, "r": 1, "limit": 100})
