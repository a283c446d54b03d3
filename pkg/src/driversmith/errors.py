"""Exception types shared across the pipeline."""


class DriversmithError(Exception):
    """Base class for all pipeline errors."""


# --- source model ---------------------------------------------------------

class RootNotFound(DriversmithError):
    pass


class NoSourceFiles(DriversmithError):
    pass


class DuplicateApi(DriversmithError):
    def __init__(self, name: str):
        super().__init__(f"duplicate API name: {name}")
        self.name = name


class MalformedLine(DriversmithError):
    def __init__(self, line_no: int, reason: str = ""):
        super().__init__(f"malformed line {line_no}" + (f": {reason}" if reason else ""))
        self.line_no = line_no


# --- knowledge graph ------------------------------------------------------

class DanglingEdge(DriversmithError):
    """An edge references a missing node; indicates an internal bug."""


class SchemaVersionMismatch(DriversmithError):
    pass


# --- index / retrieval ----------------------------------------------------

class IndexEmpty(DriversmithError):
    pass


class EmbedderFailure(DriversmithError):
    def __init__(self, chunk_id: str, cause: Exception | None = None):
        super().__init__(f"embedding failed for chunk {chunk_id}: {cause}")
        self.chunk_id = chunk_id


class EmbedderMismatch(DriversmithError):
    """Index was built with a different embedder configuration."""


# --- combinations / drivers -----------------------------------------------

class EmptyCombination(DriversmithError):
    def __init__(self, target: str):
        super().__init__(f"no known APIs parsed from the answer for target {target}")
        self.target = target


class MissingApiNode(DriversmithError):
    def __init__(self, name: str):
        super().__init__(f"API {name} has no function node in the graph")
        self.name = name


class StructuralCheckFailed(DriversmithError):
    def __init__(self, driver_id: str, missing: list[str]):
        super().__init__(f"driver {driver_id} failed structural check; missing: {missing}")
        self.driver_id = driver_id
        self.missing = missing


# --- repair ----------------------------------------------------------------

class NoErrors(DriversmithError):
    """construct_query called with no error diagnostics."""


class CompilerUnavailable(DriversmithError):
    pass


# --- fuzzing / coverage -----------------------------------------------------

class EmptyReport(DriversmithError):
    pass


class FileUniverseMismatch(DriversmithError):
    pass


# --- triage -----------------------------------------------------------------

class UnparseableReport(DriversmithError):
    def __init__(self, index: int, reason: str = ""):
        super().__init__(f"unparseable crash report #{index}" + (f": {reason}" if reason else ""))
        self.index = index


class EmptyKb(DriversmithError):
    pass


# --- llm gateway ------------------------------------------------------------

class LlmFailure(DriversmithError):
    pass


class BudgetExceeded(LlmFailure):
    pass


# --- cli / config -----------------------------------------------------------

class ConfigError(DriversmithError):
    def __init__(self, field: str, reason: str):
        super().__init__(f"config field '{field}': {reason}")
        self.field = field


class MissingArtifact(DriversmithError):
    def __init__(self, stage: str, path: str):
        super().__init__(f"stage '{stage}' requires missing artifact: {path}")
        self.stage = stage
        self.path = path
