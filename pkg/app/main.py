import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from core.config import settings
from models.schemas import HealthResponse
from routers import harness, maps
from services import registry, verification

VERSION = "1.0.0"
SERVICE = "Simsun Permutation Toolkit"

logger = logging.getLogger("uvicorn.error")

# Create FastAPI app instance
app = FastAPI(
    title=SERVICE,
    description="Bijections and exhaustive verification for simsun and double simsun permutations",
    version=VERSION,
    debug=settings.DEBUG,
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["*"],
)

# Include API routers
app.include_router(maps.router, prefix="/api/v1", tags=["maps"])
app.include_router(harness.router, prefix="/api/v1", tags=["harness"])


@app.get("/")
def root():
    return {"service": SERVICE, "version": VERSION, "docs": "/docs", "info": "/api/v1/info"}


# Health check endpoint
@app.get("/health", response_model=HealthResponse)
def health_check():
    """Health check endpoint"""
    return HealthResponse(
        service=SERVICE,
        version=VERSION,
        debug=settings.DEBUG,
        workers=settings.SIMSUN_WORKERS,
    )


# API Info endpoint
@app.get("/api/v1/info")
def api_info():
    """Registered maps, predicates, sequences, suites and harness limits"""
    return {
        "name": SERVICE,
        "version": VERSION,
        "maps": registry.map_names(),
        "predicates": registry.predicate_names(),
        "sequences": list(registry.SEQUENCE_NAMES),
        "suites": verification.suite_names(),
        "limits": {
            "nmax_default": settings.SIMSUN_NMAX,
            "nmax_limit": settings.SIMSUN_NMAX_LIMIT,
            "max_enumerate": settings.SIMSUN_MAX_ENUMERATE,
        },
        "endpoints": {
            "map": "/api/v1/maps/{name}",
            "check": "/api/v1/check/{predicate}",
            "enumerate": "/api/v1/enumerate",
            "sequence": "/api/v1/sequence/{name}",
            "verify": "/api/v1/verify/{suite}",
        },
    }


@app.on_event("startup")
async def startup_event():
    logger.info("%s v%s starting (workers=%d, nmax=%d)", SERVICE, VERSION,
                settings.SIMSUN_WORKERS, settings.SIMSUN_NMAX)


# Run the application
if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        app,
        host=settings.API_HOST,
        port=settings.API_PORT,
        reload=settings.DEBUG,
        log_level=settings.LOG_LEVEL.lower(),
    )
