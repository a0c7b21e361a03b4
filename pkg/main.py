"""
Main FastAPI application for Hypertrans.
This is the entry point that sets up the application with all routes and middleware.
"""

from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI

from app.core.config import settings
from app.core.logging import setup_logging, get_logger
from app.core.middleware import log_requests
from app.routes import bench, dependencies, info, traversals

# Initialize logging
setup_logging()
logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("🚀 Starting Hypertrans API...")
    logger.info(f"🔧 Environment: {settings.ENVIRONMENT}")
    logger.info(f"📊 Debug mode: {'✅' if settings.DEBUG_MODE else '❌'}")
    if not settings.is_default_backend_valid:
        logger.warning(f"⚠️ Unknown DEFAULT_BACKEND {settings.DEFAULT_BACKEND!r}, using {settings.default_backend}")
    logger.info(f"🧮 Default backend: {settings.default_backend}")
    logger.info("🎯 Available endpoints: /traversals, /transversality, /tmm, /irredundant, /dependencies, /bench/runs")
    logger.info("📖 Documentation: /docs, /redoc")
    yield
    logger.info("🛑 Shutting down Hypertrans API...")


# Create FastAPI application
app = FastAPI(
    title=settings.APP_TITLE,
    description=settings.APP_DESCRIPTION,
    version=settings.APP_VERSION,
    docs_url="/docs",  # SwaggerUI endpoint
    redoc_url="/redoc",  # ReDoc endpoint
    openapi_url="/openapi.json",  # OpenAPI schema endpoint
    lifespan=lifespan,
)

# Add middleware for request/response logging
app.middleware("http")(log_requests)

# Include route handlers
app.include_router(info.router)
app.include_router(traversals.router)
app.include_router(dependencies.router)
app.include_router(bench.router)

if __name__ == "__main__":
    uvicorn.run(
        app,
        host=settings.HOST,
        port=settings.PORT,
        log_level="info"
    )
