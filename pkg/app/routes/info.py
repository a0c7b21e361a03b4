"""
Info route handlers for the Hypertrans API.
Provides API information and the configured defaults.
"""

from fastapi import APIRouter

from ..core.config import settings
from ..core.logging import get_logger

logger = get_logger(__name__)

router = APIRouter(tags=["API Information"])

ENDPOINTS = ["/traversals", "/transversality", "/tmm", "/irredundant", "/dependencies", "/bench/runs"]


@router.get(
    "/",
    summary="API Information",
    description="Get basic information about the API and available endpoints",
    responses={
        200: {
            "description": "API information retrieved successfully",
            "content": {
                "application/json": {
                    "example": {
                        "message": "Hypertrans API",
                        "version": "1.0.0",
                        "default_backend": "mmcs",
                        "endpoints": ENDPOINTS,
                        "docs_url": "/docs",
                        "redoc_url": "/redoc"
                    }
                }
            }
        }
    }
)
async def root():
    """
    Get API information and available endpoints.
    """
    logger.info("ℹ️ API information requested")

    api_info = {
        "message": settings.APP_TITLE,
        "version": settings.APP_VERSION,
        "default_backend": settings.default_backend,
        "endpoints": ENDPOINTS,
        "docs_url": "/docs",
        "redoc_url": "/redoc"
    }

    logger.debug(f"Returning API info: {api_info}")
    return api_info
