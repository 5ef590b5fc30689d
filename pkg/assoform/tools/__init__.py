"""Operations shared by the command line and the MCP server."""
