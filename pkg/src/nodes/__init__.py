# One LangGraph node per verification suite
