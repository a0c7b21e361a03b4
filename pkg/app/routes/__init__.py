# FastAPI route handlers 