import signal
import threading
from typing import Callable

from classica.utils import classica_logger


class SignalHandler:
    """Stops a running server on SIGINT/SIGTERM."""

    def __init__(self, shutdown: Callable[[], None]):
        self.shutdown = shutdown
        signal.signal(signal.SIGINT, self.handle_signal)  # Handle Ctrl+C
        signal.signal(signal.SIGTERM, self.handle_signal)  # Handle termination

    def handle_signal(self, signum, frame):
        classica_logger.info(f"SERVICE Received signal {signum}, stopping server...")
        # werkzeug's shutdown blocks until serve_forever returns, so it cannot run on the serving thread
        threading.Thread(target=self.shutdown, daemon=True).start()
