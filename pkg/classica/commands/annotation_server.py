from flask import Flask, Response, abort, request
from werkzeug.serving import make_server

from classica.commands.pipeline import AnnotationPipeline
from classica.utils import classica_logger, config_reader
from classica.utils.errors import ClassicaError
from classica.utils.signal_handler import SignalHandler

TSV_MIMETYPE = "text/tab-separated-values"


def create_app(pipeline: AnnotationPipeline, max_body_bytes: int | None = None) -> Flask:
    if max_body_bytes is None:
        max_body_bytes = config_reader.get("service", "max_body_bytes", 1024 * 1024)
    app = Flask("classica")
    app.config["MAX_CONTENT_LENGTH"] = max_body_bytes

    @app.get("/health")
    def health():
        return Response("ok", mimetype="text/plain")

    @app.post("/tag")
    def tag():
        if request.content_length is not None and request.content_length > max_body_bytes:
            abort(413)
        body = request.get_data(cache=False)
        classica_logger.info(f"SERVICE Request POST /tag {len(body)} bytes from {request.remote_addr}")
        if not body:
            abort(400, description="Empty request body")
        try:
            text = body.decode("utf-8")
        except UnicodeDecodeError as e:
            abort(400, description=f"Request body is not valid UTF-8 ({e.reason} at byte {e.start})")
        try:
            annotated = pipeline.render(text)
        except ClassicaError as e:
            classica_logger.error(f"SERVICE Annotation failed: {e}")
            abort(500, description=str(e))
        return Response(annotated, mimetype=TSV_MIMETYPE)

    return app


class AnnotationServer:
    def __init__(self, pipeline: AnnotationPipeline, host: str = "127.0.0.1", port: int = 8080, max_body_bytes: int | None = None):
        self.host = host
        self.port = port
        self.app = create_app(pipeline, max_body_bytes)
        # requests share the read-only models, one thread each
        self.server = make_server(host, port, self.app, threaded=True)
        self.port = self.server.server_port

    def serve_forever(self) -> None:
        classica_logger.info(f"SERVICE Listening on http://{self.host}:{self.port}")
        self.server.serve_forever()

    def stop(self) -> None:
        self.server.shutdown()
        classica_logger.info("SERVICE Server stopped")


def serve(pipeline: AnnotationPipeline, host: str | None = None, port: int | None = None) -> None:
    host = host or config_reader.get("service", "host", "127.0.0.1")
    port = port if port is not None else config_reader.get("service", "port", 8080)
    server = AnnotationServer(pipeline, host, port)
    SignalHandler(server.stop)
    server.serve_forever()
