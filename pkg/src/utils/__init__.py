# Shared configuration and error types
from .config import Settings, resolve_node_budget
from .errors import PathGraphError
