"""ARK resolution service.

One decision ladder serves every request: parse the ARK out of the
path, answer inflections with ANVL metadata, deliver hosted terms
directly (HTML page, or the ANVL record under `Accept: text/plain`),
and 302-redirect foreign NAANs to their registered target with the
whole remaining path passed through. Hosted content is served in
place rather than redirected; the institutional and payload URLs a
request would historically have hopped through are still traceable via
resolve_chain, which computes the chain without any network I/O.

Which rule fired never depends on the hostname the request arrived on;
the ARK itself carries the identity.
"""

import json
import os
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import unquote

from arkvoc import anvl, core, publisher, registry as registry_mod, vocab as vocab_mod
from arkvoc.core import ArkParseError, Inflection
from arkvoc.errors import ArkvocError


class ResolveError(ArkvocError):
    pass


@dataclass(frozen=True)
class HostedRoute:
    naan: str
    assigned_name: str
    vocab_id: str
    commitment: str = ""
    institution_base: str = ""
    payload_base: str = ""

    @property
    def key(self):
        return (self.naan, self.assigned_name)


@dataclass
class ResolverConfig:
    listen_host: str = "127.0.0.1"
    listen_port: int = 8080
    public_hostname: str = "localhost"
    registry: registry_mod.Registry = None
    routes: dict = field(default_factory=dict)
    vocabularies: dict = field(default_factory=dict)
    redirect_status: int = 302

    def add_route(self, route: HostedRoute):
        if route.key in self.routes:
            raise ResolveError("duplicate-route", f"route {route.key} declared twice")
        if route.vocab_id not in self.vocabularies:
            raise ResolveError("unknown-vocabulary", f"route {route.key} names unloaded vocabulary {route.vocab_id!r}")
        self.routes[route.key] = route


@dataclass(frozen=True)
class Decision:
    status: int
    body: str
    content_type: str = "text/plain; charset=utf-8"
    location: str = ""

HTML_TYPE = "text/html; charset=utf-8"


def _route_for(config, ark):
    return config.routes.get((ark.naan, ark.assigned_name))


def _hosted_metadata(config, route, ark):
    v = config.vocabularies[route.vocab_id]
    if not ark.qualifiers:
        return vocab_mod.vocab_record(v)
    term = vocab_mod.get_term(v, ark.qualifiers[0])
    if term is None:
        return None
    return vocab_mod.term_record(v, term)


def _with_commitment(record: str, commitment: str) -> str:
    return record + anvl.format_record([("commitment", commitment)])


def decide(config: ResolverConfig, raw_path: str, accept: str = "") -> Decision:
    """Pure request decision: no sockets, no side effects."""
    path = unquote(raw_path)
    if "ark:" not in path:
        return Decision(501, "not implemented: no ARK label in request path\n")
    try:
        ark, suffix = core.split_request(path)
    except ArkParseError as exc:
        return Decision(400, f"{exc}\n")

    canonical = core.canonical_string(ark)
    route = _route_for(config, ark)
    record = config.registry and registry_mod.lookup(config.registry, ark.naan)

    if ark.inflection is not Inflection.NONE:
        if route is not None:
            body = _hosted_metadata(config, route, ark)
            if body is None:
                return Decision(404, f"term-unknown: {canonical}\n")
            if ark.inflection is Inflection.COMMITMENT:
                body = _with_commitment(body, route.commitment)
            return Decision(200, body)
        if record is not None:
            pairs = [("ark", canonical), ("naan", record.naan)]
            if record.who:
                pairs.append(("who", record.who))
            if record.where:
                pairs.append(("where", record.where))
            if record.when:
                pairs.append(("when", record.when))
            body = anvl.format_record(pairs)
            if ark.inflection is Inflection.COMMITMENT:
                body = _with_commitment(body, record.commitment)
            return Decision(200, body)
        return Decision(404, f"naan-unknown: {ark.naan}\n")

    if route is not None:
        v = config.vocabularies[route.vocab_id]
        wants_text = "text/plain" in accept
        if not ark.qualifiers:
            if wants_text:
                return Decision(200, vocab_mod.vocab_record(v))
            return Decision(200, publisher.index_page_html(v), content_type=HTML_TYPE)
        term = vocab_mod.get_term(v, ark.qualifiers[0])
        if term is None:
            return Decision(404, f"term-unknown: {canonical}\n")
        if wants_text:
            return Decision(200, vocab_mod.term_record(v, term))
        page = publisher.term_page_html(v, term, config.public_hostname)
        return Decision(200, page, content_type=HTML_TYPE)

    if record is not None and record.where:
        location = record.where.rstrip("/") + "/" + canonical + suffix
        return Decision(config.redirect_status, f"redirect: {location}\n", location=location)
    return Decision(404, f"naan-unknown: {ark.naan}\n")


def resolve_chain(ark, config: ResolverConfig):
    """Ordered hop list for an ARK, computed without network I/O.

    Hop 1 is always the public resolver URI. A hosted route contributes
    its institutional and payload URLs when configured (a purely local
    route stays a single hop); a foreign NAAN contributes its registry
    redirect target. Unknown NAANs raise naan-unknown.
    """
    if isinstance(ark, str):
        ark = core.parse(ark)
    canonical = core.canonical_string(ark)
    hops = [f"https://{config.public_hostname}/{canonical}"]
    route = _route_for(config, ark)
    if route is not None:
        tail = route.vocab_id
        if ark.qualifiers:
            tail += "/" + "/".join(ark.qualifiers)
        for base in (route.institution_base, route.payload_base):
            if base:
                hops.append(base.rstrip("/") + "/" + tail)
        return hops
    record = config.registry and registry_mod.lookup(config.registry, ark.naan)
    if record is not None and record.where:
        hops.append(record.where.rstrip("/") + "/" + canonical)
        return hops
    raise ResolveError("naan-unknown", f"no route or registry entry for naan {ark.naan}")


def healthcheck(config: ResolverConfig) -> str:
    return anvl.format_record([
        ("status", "ok"),
        ("vocabularies", len(config.vocabularies)),
        ("terms", sum(len(v.terms) for v in config.vocabularies.values())),
        ("registry", len(config.registry) if config.registry else 0),
    ])


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def do_GET(self):
        if self.path == "/healthz":
            self._reply(Decision(200, healthcheck(self.server.config)))
            return
        decision = decide(self.server.config, self.path, self.headers.get("Accept", ""))
        self._reply(decision)

    def _reply(self, decision: Decision):
        body = decision.body.encode("utf-8")
        self.send_response(decision.status)
        if decision.location:
            self.send_header("Location", decision.location)
        self.send_header("Content-Type", decision.content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, fmt, *args):
        # access log on stdout, one line per request
        print(f"{self.address_string()} {fmt % args}", flush=True)


def build_server(config: ResolverConfig) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer((config.listen_host, config.listen_port), _Handler)
    server.config = config
    return server


def serve(config: ResolverConfig) -> None:
    server = build_server(config)
    host, port = server.server_address[:2]
    # flush so the bound port is visible even when stdout is a pipe or file
    print(f"serving on http://{host}:{port}/ as https://{config.public_hostname}/",
          flush=True)
    try:
        server.serve_forever()
    finally:
        server.server_close()


def start_background(config: ResolverConfig):
    """Start a server thread; returns (server, thread). Test helper."""
    server = build_server(config)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread


def _split_mapping(value: str, key: str):
    left, sep, right = value.partition("=")
    if not sep or not left or not right:
        raise ResolveError("bad-config", f"{key}: expected <key>=<value>, got {value!r}")
    return left.strip(), right.strip()


def _parse_route_key(spec: str):
    naan, sep, assigned = spec.partition("/")
    if not sep or not naan or not assigned:
        raise ResolveError("bad-config", f"route key must be <naan>/<assigned-name>, got {spec!r}")
    return naan, assigned


def load_vocabulary_file(path: str, minter_state=None):
    with open(path, encoding="utf-8") as handle:
        document = json.load(handle)
    return vocab_mod.load_vocabulary(document, minter_state)


def config_from_anvl(text: str, base_dir: str = ".") -> ResolverConfig:
    """Build a ResolverConfig from its ANVL config record.

    Keys: listen (host:port), hostname, registry (path), vocab
    (id=path, repeated), route (naan/name=vocab-id, repeated), and the
    per-route keys commitment / institution / payload
    (naan/name=value). Relative paths resolve against base_dir.
    """
    pairs = anvl.parse_record(text)
    config = ResolverConfig()

    def path_of(p):
        return p if os.path.isabs(p) else os.path.join(base_dir, p)

    listen = anvl.first(pairs, "listen")
    if listen:
        host, sep, port = listen.rpartition(":")
        if not sep:
            raise ResolveError("bad-config", f"listen must be host:port, got {listen!r}")
        try:
            config.listen_port = int(port)
        except ValueError as exc:
            raise ResolveError("bad-config", f"bad listen port {port!r}") from exc
        config.listen_host = host
    hostname = anvl.first(pairs, "hostname")
    if hostname:
        config.public_hostname = hostname
    registry_path = anvl.first(pairs, "registry")
    if registry_path:
        with open(path_of(registry_path), encoding="utf-8") as handle:
            config.registry = registry_mod.parse_registry(handle.read())
    status = anvl.first(pairs, "redirect-status")
    if status:
        config.redirect_status = int(status)

    for value in anvl.all_values(pairs, "vocab"):
        vocab_id, path = _split_mapping(value, "vocab")
        result = load_vocabulary_file(path_of(path))
        if result.vocabulary.id != vocab_id:
            raise ResolveError("bad-config", f"vocab {path!r} declares id {result.vocabulary.id!r}, config says {vocab_id!r}")
        config.vocabularies[vocab_id] = result.vocabulary

    extras = {}
    for key in ("commitment", "institution", "payload"):
        for value in anvl.all_values(pairs, key):
            spec, text_value = _split_mapping(value, key)
            extras.setdefault(_parse_route_key(spec), {})[key] = text_value

    for value in anvl.all_values(pairs, "route"):
        spec, vocab_id = _split_mapping(value, "route")
        naan, assigned = _parse_route_key(spec)
        opts = extras.get((naan, assigned), {})
        config.add_route(HostedRoute(
            naan=naan,
            assigned_name=assigned,
            vocab_id=vocab_id,
            commitment=opts.get("commitment", ""),
            institution_base=opts.get("institution", ""),
            payload_base=opts.get("payload", ""),
        ))
    return config


def load_config(path: str) -> ResolverConfig:
    with open(path, encoding="utf-8") as handle:
        return config_from_anvl(handle.read(), base_dir=os.path.dirname(os.path.abspath(path)))
