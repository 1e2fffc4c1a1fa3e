"""timedata-lab: comlink latency, memory-timing, optics, relativistic
timing, plane geometry and parallel-sort toolkit with a spreadsheet CLI."""

__version__ = "0.1.0"
