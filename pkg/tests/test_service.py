import threading
import urllib.request

import pytest

from classica.commands.annotation_server import TSV_MIMETYPE, AnnotationServer, create_app
from classica.commands.command_processor import dispatch
from classica.commands.pipeline import AnnotationPipeline, ModelPaths
from classica.corpus.annotation_tsv import HEADER, parse_corpus

TEXT = "il la portait .\nla porte tombait .\n"


@pytest.fixture(scope="module")
def pipeline(model_dir):
    return AnnotationPipeline.from_paths(ModelPaths.resolve(models_dir=model_dir))


@pytest.fixture
def client(pipeline):
    return create_app(pipeline, max_body_bytes=4096).test_client()


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.get_data(as_text=True) == "ok"


def test_tag_matches_pipeline(client, pipeline):
    response = client.post("/tag", data=TEXT.encode("utf-8"))
    assert response.status_code == 200
    assert response.mimetype == TSV_MIMETYPE
    body = response.get_data(as_text=True)
    assert body == pipeline.render(TEXT)
    assert body.startswith(HEADER + "\n")
    assert [len(sentence) for sentence in parse_corpus(body)] == [4, 4]


def test_tag_matches_cli(client, model_dir, tmp_path, monkeypatch):
    monkeypatch.delenv("CLASSICA_MODELS", raising=False)
    text_path = tmp_path / "text.txt"
    text_path.write_text(TEXT, encoding="utf-8")
    out_path = tmp_path / "tagged.tsv"
    assert dispatch(["tag", "--in", str(text_path), "--out", str(out_path), "--models-dir", str(model_dir)]) == 0
    response = client.post("/tag", data=TEXT.encode("utf-8"))
    assert response.get_data() == out_path.read_bytes()


def test_lexicon_fills_morphology(client):
    response = client.post("/tag", data="la porte .".encode("utf-8"))
    [sentence] = parse_corpus(response.get_data(as_text=True))
    assert "GENRE=f" in str(sentence[0].morph)
    assert str(sentence[-1].morph) == "_"


def test_empty_body(client):
    assert client.post("/tag", data=b"").status_code == 400


def test_invalid_utf8(client):
    response = client.post("/tag", data=b"caf\xe9 cr\xe8me")
    assert response.status_code == 400
    assert b"UTF-8" in response.get_data()


def test_oversized_body(client):
    assert client.post("/tag", data=b"a " * 4096).status_code == 413


def test_blank_lines_give_header_only(client):
    response = client.post("/tag", data=b"\n\n")
    assert response.status_code == 200
    assert response.get_data(as_text=True) == HEADER + "\n"


def test_tag_requires_post(client):
    assert client.get("/tag").status_code == 405


def test_live_server(pipeline):
    server = AnnotationServer(pipeline, "127.0.0.1", 0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        request = urllib.request.Request(f"http://127.0.0.1:{server.port}/tag", data=TEXT.encode("utf-8"), method="POST")
        with urllib.request.urlopen(request, timeout=10) as response:
            assert response.read().decode("utf-8") == pipeline.render(TEXT)
    finally:
        server.stop()
        thread.join(timeout=10)
