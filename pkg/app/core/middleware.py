"""
Middleware for the Hypertrans application.
Logs requests and reports how long each pipeline call took.
"""

import time
from fastapi import Request
from .logging import get_logger

logger = get_logger(__name__)


async def log_requests(request: Request, call_next):
    """
    Log every request and attach the elapsed milliseconds as X-Process-Time-Ms.

    Args:
        request: The incoming HTTP request
        call_next: The next function in the middleware chain

    Returns:
        Response with the timing header
    """
    start_time = time.perf_counter()

    logger.info(f"🔄 Incoming request: {request.method} {request.url.path}")
    client_ip = request.client.host if request.client else "unknown"
    logger.debug(f"Client: {client_ip}, content-length: {request.headers.get('content-length', '0')}")

    response = await call_next(request)

    elapsed_ms = (time.perf_counter() - start_time) * 1000.0
    logger.info(f"✅ Response: {response.status_code} | {elapsed_ms:.1f} ms | {request.method} {request.url.path}")
    response.headers["X-Process-Time-Ms"] = f"{elapsed_ms:.3f}"

    return response
