# Every access to problem data goes through a bundle, so that queries are counted rather than inferred.

from .ledger_snapshot import LedgerSnapshot  # noqa: F401
from .query_ledger import QueryLedger  # noqa: F401
from .oracle_bundle import OracleBundle  # noqa: F401
from .component_oracle import ComponentOracle  # noqa: F401
from .matrix_oracle import COLUMN, ENTRY, ROW, MatrixOracle  # noqa: F401
from .simulator_oracle import SIMULATOR, SimulatorOracle  # noqa: F401
from .queries import batch_query, sample_query  # noqa: F401
