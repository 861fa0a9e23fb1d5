"""HTTP service layer; the FastAPI application lives in ``.app``."""
