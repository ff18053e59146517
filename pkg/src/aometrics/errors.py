"""Exception types raised by the analysis pipeline."""

from __future__ import annotations


class AnalysisError(Exception):
    """Base class for all errors the CLI maps to exit code 1."""


class RootNotFound(AnalysisError):
    pass


class EmptyCorpus(AnalysisError):
    pass


class WeightConfigError(AnalysisError):
    """Base class for weight-override configuration problems."""


class ConfigNotFound(WeightConfigError):
    pass


class MalformedConfig(WeightConfigError):
    pass


class UnknownWeightKey(WeightConfigError):
    pass


class NegativeWeight(WeightConfigError):
    pass


class StrictModeParseFailure(AnalysisError):
    def __init__(self, files: list[str]):
        self.files = list(files)
        listing = ", ".join(self.files)
        super().__init__(f"parse errors in strict mode: {listing}")


class TooFewVersions(AnalysisError):
    pass


class WriteFailure(AnalysisError):
    pass
