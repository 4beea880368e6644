"""Chat-completion client with live, cassette-replay and scripted providers."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import threading
import time
import unicodedata
from collections import deque
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

import httpx

log = logging.getLogger(__name__)

API_KEY_ENV = "QMIGRATE_API_KEY"
ENDPOINT_ENV = "QMIGRATE_ENDPOINT"
DEFAULT_TEMPERATURE = 0.1
ROLES = ("system", "user", "assistant")
_TRANSIENT_STATUS = {429, 500, 502, 503, 504}


class LLMError(RuntimeError):
    pass


class TransportError(LLMError):
    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class RateLimited(LLMError):
    def __init__(self, retry_after: float | None):
        super().__init__(f"rate limited (retry after {retry_after})")
        self.retry_after = retry_after


class ContextOverflow(LLMError):
    pass


class CassetteMiss(LLMError):
    def __init__(self, key: str):
        super().__init__(f"no cassette for request {key}")
        self.key = key


class CredentialMissing(LLMError):
    def __init__(self, env_var: str = API_KEY_ENV):
        super().__init__(f"environment variable {env_var} is not set")
        self.env_var = env_var


class ScriptExhausted(LLMError):
    pass


@dataclass(frozen=True)
class ChatMessage:
    role: str
    content: str

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")
        if self.role in ("system", "user") and not self.content:
            raise ValueError(f"{self.role} message must not be empty")


@dataclass(frozen=True)
class ChatRequest:
    model_id: str
    messages: tuple[ChatMessage, ...]
    temperature: float = DEFAULT_TEMPERATURE

    def __post_init__(self):
        if not self.messages:
            raise ValueError("request has no messages")
        if not 0 <= self.temperature <= 2:
            raise ValueError(f"temperature {self.temperature} outside [0, 2]")
        if any(m.role == "system" for m in self.messages[1:]):
            raise ValueError("a system message may only appear first")

    def to_wire(self) -> dict:
        return {
            "model": self.model_id,
            "temperature": self.temperature,
            "messages": [{"role": m.role, "content": m.content} for m in self.messages],
        }


@dataclass(frozen=True)
class ChatResponse:
    content: str
    model_id: str
    finish_reason: str = "stop"
    prompt_tokens: int = 0
    completion_tokens: int = 0

    def __post_init__(self):
        if self.prompt_tokens < 0 or self.completion_tokens < 0:
            raise ValueError("token counts must be non-negative")
        if self.finish_reason == "stop" and self.content is None:
            raise ValueError("completed response without content")


def request_key(req: ChatRequest) -> str:
    canonical = {
        "model": unicodedata.normalize("NFC", req.model_id),
        "temperature": repr(float(req.temperature)),
        "messages": [
            {"role": m.role, "content": unicodedata.normalize("NFC", m.content)} for m in req.messages
        ],
    }
    blob = json.dumps(canonical, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_cassette(cassette_dir: str | Path, req: ChatRequest, resp: ChatResponse) -> Path:
    key = request_key(req)
    doc = {
        "key": key,
        "request": req.to_wire(),
        "response": asdict(resp),
    }
    path = Path(cassette_dir) / f"{key}.json"
    _atomic_write(path, json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=True) + "\n")
    return path


def read_cassette(path: str | Path) -> ChatResponse:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return ChatResponse(**doc["response"])


class Provider:
    """Counts completions so callers can audit how often the model was hit."""

    def __init__(self):
        self.calls = 0
        self._lock = threading.Lock()

    def _count(self) -> None:
        with self._lock:
            self.calls += 1

    def complete(self, req: ChatRequest) -> ChatResponse:
        raise NotImplementedError


class ReplayProvider(Provider):
    def __init__(self, cassette_dir: str | Path):
        super().__init__()
        self.cassette_dir = Path(cassette_dir)

    def complete(self, req: ChatRequest) -> ChatResponse:
        key = request_key(req)
        path = self.cassette_dir / f"{key}.json"
        if not path.is_file():
            raise CassetteMiss(key)
        self._count()
        return read_cassette(path)


class ScriptedProvider(Provider):
    def __init__(self, responses: Iterable[str | ChatResponse], model_id: str = "scripted"):
        super().__init__()
        self.model_id = model_id
        self._queue = deque(responses)

    def complete(self, req: ChatRequest) -> ChatResponse:
        with self._lock:
            if not self._queue:
                raise ScriptExhausted("scripted provider has no responses left")
            item = self._queue.popleft()
        self._count()
        if isinstance(item, ChatResponse):
            return item
        return ChatResponse(content=item, model_id=req.model_id or self.model_id)


@dataclass
class LiveProvider(Provider):
    endpoint: str
    api_key: str | None = None
    record_dir: Path | None = None
    max_retries: int = 3
    backoff: float = 0.5
    max_in_flight: int = 4
    timeout: float = 120.0
    transport: httpx.BaseTransport | None = None
    sleep: object = field(default=time.sleep, repr=False)

    def __post_init__(self):
        Provider.__init__(self)
        self.attempts = 0
        if self.api_key is None:
            self.api_key = os.environ.get(API_KEY_ENV)
        if not self.api_key:
            raise CredentialMissing()
        self._gate = threading.BoundedSemaphore(self.max_in_flight)
        self._client = httpx.Client(timeout=self.timeout, transport=self.transport)

    def complete(self, req: ChatRequest) -> ChatResponse:
        self._count()
        with self._gate:
            resp = self._post_with_retries(req)
        if self.record_dir is not None:
            write_cassette(self.record_dir, req, resp)
        return resp

    def _post_with_retries(self, req: ChatRequest) -> ChatResponse:
        headers = {"Authorization": f"Bearer {self.api_key}"}
        last_error: LLMError | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                delay = self.backoff * 2 ** (attempt - 1)
                if isinstance(last_error, RateLimited) and last_error.retry_after:
                    delay = max(delay, last_error.retry_after)
                log.info("retry %d/%d after %.2fs: %s", attempt, self.max_retries, delay, last_error)
                self.sleep(delay)
            with self._lock:
                self.attempts += 1
            log.debug("attempt %d for %s", attempt + 1, req.model_id)
            try:
                r = self._client.post(self.endpoint, json=req.to_wire(), headers=headers)
            except httpx.HTTPError as exc:
                last_error = TransportError(str(exc))
                continue
            if r.status_code == 200:
                try:
                    body = r.json()
                except ValueError:
                    raise TransportError("completion body is not JSON") from None
                return _parse_completion(body, req.model_id)
            if r.status_code == 429:
                last_error = RateLimited(_retry_after(r))
                continue
            if r.status_code in _TRANSIENT_STATUS:
                last_error = TransportError(f"HTTP {r.status_code}")
                continue
            if _is_context_overflow(r):
                raise ContextOverflow(r.text)
            raise TransportError(f"HTTP {r.status_code}: {r.text[:200]}")
        assert last_error is not None
        raise last_error


def _retry_after(r: httpx.Response) -> float | None:
    value = r.headers.get("retry-after")
    try:
        return float(value) if value is not None else None
    except ValueError:
        return None


def _is_context_overflow(r: httpx.Response) -> bool:
    if r.status_code not in (400, 413):
        return False
    try:
        err = r.json().get("error", {})
    except ValueError:
        return "context" in r.text.lower()
    return err.get("code") == "context_length_exceeded" or "maximum context length" in str(err.get("message", ""))


def _parse_completion(body: dict, requested_model: str) -> ChatResponse:
    try:
        choice = body["choices"][0]
        content = choice["message"].get("content") or ""
        finish = choice.get("finish_reason") or "stop"
    except (KeyError, IndexError, TypeError) as exc:
        raise TransportError(f"malformed completion body: {exc}") from None
    usage = body.get("usage") or {}
    return ChatResponse(
        content=content,
        model_id=body.get("model", requested_model),
        finish_reason=finish,
        prompt_tokens=int(usage.get("prompt_tokens", 0)),
        completion_tokens=int(usage.get("completion_tokens", 0)),
    )


def complete(provider: Provider, req: ChatRequest) -> ChatResponse:
    return provider.complete(req)
