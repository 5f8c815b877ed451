"""Tests for the tool functions and the FastMCP server wiring"""

import json

from fastmcp import Client

from bracketfix.app.mcp_server import app
from bracketfix.app.solver_tools import (
    feedback_arc_set_tool,
    generate_instance_tool,
    reduce_tf_tool,
    render_bracket_tool,
    solve_instance_tool,
    verify_seeding_tool,
)

UPSET_4 = "n 4\nmatrix -110\nmatrix 0-11\nmatrix 00-1\nmatrix 100-\ndemand 3 0\n"

TOOL_NAMES = {
    "solve_instance_tool",
    "verify_seeding_tool",
    "feedback_arc_set_tool",
    "generate_instance_tool",
    "reduce_tf_tool",
    "render_bracket_tool",
}


def payload(result) -> dict:
    content = getattr(result, "content", result)
    return json.loads(content[0].text)


class TestToolFunctions:
    def test_solve(self):
        for algo in ("oracle", "dp", "xp", "fpt"):
            response = solve_instance_tool(UPSET_4, algo=algo)
            assert response["status"] == "success"
            assert response["answer"] == "yes"
            assert sorted(response["seeding"]) == [0, 1, 2, 3]

    def test_solve_weighted(self):
        text = "n 4\nmatrix -111\nmatrix 0-11\nmatrix 00-1\nmatrix 000-\ndemand 0 3\ndemand 1 3\n"
        response = solve_instance_tool(text, weighted=True)
        assert response["answer"] == "no"
        assert (response["best_weight"], response["total_weight"]) == (1, 2)

    def test_bad_input_is_an_error_response(self):
        response = solve_instance_tool("n 2\nmatrix -1\nmatrix 1-\n")
        assert response["status"] == "error"
        assert "line 2" in response["error"]

    def test_verify(self):
        response = verify_seeding_tool(UPSET_4, [0, 3, 1, 2])
        assert response == {"status": "success", "ok": True, "missed": [], "round_violations": []}
        response = verify_seeding_tool(UPSET_4, [0, 1, 2, 3])
        assert response["missed"] == [[3, 0]]

    def test_verify_rejects_non_permutation(self):
        assert verify_seeding_tool(UPSET_4, [0, 0, 1, 2])["status"] == "error"

    def test_feedback_arc_set(self):
        response = feedback_arc_set_tool(UPSET_4)
        assert response["k"] == 1
        assert response["arcs"] == [[3, 0]]
        assert response["sigma"] == [0, 1, 2, 3]

    def test_generate(self):
        response = generate_instance_tool(8, k=1, demands=3, seed=2)
        assert response["status"] == "success"
        assert solve_instance_tool(response["instance_text"])["answer"] == "yes"
        assert generate_instance_tool(8, demands=9)["status"] == "error"

    def test_reduce(self):
        response = reduce_tf_tool("n 2\nmatrix -1\nmatrix 0-\ntarget 1\n")
        assert response["demand_count"] == 2
        assert solve_instance_tool(response["instance_text"])["answer"] == "no"
        assert reduce_tf_tool(UPSET_4)["status"] == "error"

    def test_render(self):
        response = render_bracket_tool(UPSET_4, [3, 0, 1, 2], fmt="dot")
        assert response["status"] == "success"
        assert "3 -> 0" in response["rendering"]
        assert render_bracket_tool(UPSET_4, [3, 0, 1, 2], fmt="png")["status"] == "error"


class TestServer:
    async def test_lists_every_tool(self):
        async with Client(app) as client:
            tools = await client.list_tools()
        assert {tool.name for tool in tools} == TOOL_NAMES

    async def test_call_solve(self):
        async with Client(app) as client:
            result = await client.call_tool("solve_instance_tool", {"instance_text": UPSET_4, "algo": "xp"})
        response = payload(result)
        assert response["status"] == "success"
        assert response["answer"] == "yes"
