"""HTTP service: configuration, session store, and the FastAPI app."""

from vietext.service.app import create_app
from vietext.service.config import ServiceConfig, config_schema_json, load_config
from vietext.service.sessions import SessionStore

__all__ = ["ServiceConfig", "SessionStore", "config_schema_json",
           "create_app", "load_config"]
