from .runner import METHODS, evaluate, outcomes_agree, verify_catalog, write_reports

__all__ = ["METHODS", "evaluate", "outcomes_agree", "verify_catalog", "write_reports"]
