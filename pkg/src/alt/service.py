"""Stateless HTTP facade over the analyzer.

Lexicon and stopword data load once at startup and are shared immutably
across requests; handlers never mutate server state, so identical bodies
produce identical reports (apart from the elapsed_ms timing field).
"""

from __future__ import annotations

import json
import time
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .errors import AltError, EmptyText, InvalidEncoding, NoWords
from .lexicon import load_lexicon, load_stopwords
from .report import AnalyzeConfig, analyze, report_to_dict
from .tokenizer import normalize_text

MAX_BODY_BYTES = 1 << 20

DEFAULT_ORIGINS = [
    "http://localhost:5173",
    "http://127.0.0.1:5173",
]


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def create_app(lexicon_path: str | Path | None = None,
               stopword_path: str | Path | None = None,
               allowed_origins: list[str] | None = None) -> FastAPI:
    @asynccontextmanager
    async def lifespan(app: FastAPI):
        app.state.lexicon = load_lexicon(lexicon_path)
        app.state.stopwords = load_stopwords(stopword_path)
        app.state.lexicon_source = str(lexicon_path) if lexicon_path \
            else "bundled"
        yield

    app = FastAPI(title="alt", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=allowed_origins or DEFAULT_ORIGINS,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def loaded(request: Request):
        return getattr(request.app.state, "lexicon", None)

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.get("/api/v1/lexicon")
    async def lexicon_metadata(request: Request):
        lex = loaded(request)
        if lex is None:
            return _error(503, "lexicon not loaded yet")
        return {
            "name": lex.source_name,
            "size": lex.size,
            "source": request.app.state.lexicon_source,
        }

    @app.post("/api/v1/analyze")
    async def analyze_endpoint(request: Request):
        lex = loaded(request)
        if lex is None:
            return _error(503, "lexicon not loaded yet")
        body = await request.body()
        if len(body) > MAX_BODY_BYTES:
            return _error(413, "request body exceeds 1 MiB")
        try:
            doc = json.loads(body)
        except (UnicodeDecodeError, json.JSONDecodeError):
            return _error(400, "body is not valid JSON")
        if not isinstance(doc, dict) or not isinstance(doc.get("text"), str):
            return _error(400, "expected an object with a string 'text'")
        keywords = doc.get("keywords", [])
        if not isinstance(keywords, list) \
                or not all(isinstance(k, str) for k in keywords):
            return _error(400, "'keywords' must be a list of strings")
        options = doc.get("options", {})
        if not isinstance(options, dict):
            return _error(400, "'options' must be an object")
        unknown = set(options) - {"cloud_cap", "include_stopwords_in_totals"}
        if unknown:
            return _error(
                400, "unknown options: " + ", ".join(sorted(unknown)))
        try:
            config = AnalyzeConfig(
                cloud_cap=int(options.get("cloud_cap", 100)),
                include_stopwords_in_totals=bool(
                    options.get("include_stopwords_in_totals", True)),
            )
        except (TypeError, ValueError):
            return _error(400, "bad analysis options")

        started = time.monotonic()
        try:
            buf = normalize_text(doc["text"])
            report = analyze(buf, keywords, lex,
                             request.app.state.stopwords, config)
        except (EmptyText, InvalidEncoding) as exc:
            return _error(400, str(exc))
        except NoWords as exc:
            return _error(422, str(exc))
        except AltError as exc:
            return _error(400, str(exc))
        payload = report_to_dict(report, buf)
        payload["elapsed_ms"] = (time.monotonic() - started) * 1000.0
        return payload

    return app
