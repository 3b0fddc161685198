from .results_api import ResultsDatabase

__all__ = ["ResultsDatabase"]
