# Tracing of outer runs: which step ran when, and what it cost in queries.

from .trace_node import TraceNode  # noqa: F401
from .simple_tracer import SimpleTracer  # noqa: F401
from .full_tracer import FullTracer  # noqa: F401
from .performance_log import PerformanceLog  # noqa: F401
