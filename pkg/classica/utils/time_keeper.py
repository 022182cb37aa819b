import time
from classica.utils import classica_logger

class TimeKeeper:
    """Wall-clock bookkeeping for repeated cycles (training epochs)."""

    def __init__(self, name, debug_every=0):
        self.name = name
        self.debug_every = debug_every
        self.start_time = time.perf_counter()
        self.cycle_starttime = self.start_time
        self.cycle = 0

    def cycle_start(self):
        self.cycle_starttime = time.perf_counter()
        if self.debug_every > 0 and self.cycle % self.debug_every == 0:
            classica_logger.debug(f"TimeKeeper {self.name} is at cycle {self.cycle} at {self.time_since_start():.3f} seconds")

    def cycle_end(self) -> float:
        """Close the current cycle and return its duration."""
        self.cycle += 1
        return time.perf_counter() - self.cycle_starttime

    def time_since_start(self) -> float:
        return time.perf_counter() - self.start_time
