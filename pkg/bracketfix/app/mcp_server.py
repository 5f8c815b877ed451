"""
Bracket Fixing FastMCP Server

Exposes the solvers as tools over stdio:
- solving, verifying and rendering seedings
- feedback arc sets
- instance generation and the Tournament Fixing reduction
"""

import logging

from fastmcp import FastMCP

from .solver_tools import (
    feedback_arc_set_tool,
    generate_instance_tool,
    reduce_tf_tool,
    render_bracket_tool,
    solve_instance_tool,
    verify_seeding_tool,
)

logger = logging.getLogger(__name__)

# Create FastMCP app
app = FastMCP("Bracket Fixing Solver")

# Register solver tools
app.tool()(solve_instance_tool)
app.tool()(verify_seeding_tool)
app.tool()(feedback_arc_set_tool)
app.tool()(generate_instance_tool)
app.tool()(reduce_tf_tool)
app.tool()(render_bracket_tool)
