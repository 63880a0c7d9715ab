from .table_checks import TableChecks
from .eigenvalue_checks import EigenvalueChecks
from .slope_checks import SlopeChecks
from .congruence_checks import CongruenceChecks
from .calibration_checks import CalibrationChecks

# A central list of all check provider classes to be registered.
# To add a new check, simply import it and add its class to this list.
ALL_CHECK_PROVIDERS = [
    CalibrationChecks,
    TableChecks,
    EigenvalueChecks,
    SlopeChecks,
    CongruenceChecks,
]

__all__ = [
    "ALL_CHECK_PROVIDERS",
    "CalibrationChecks",
    "TableChecks",
    "EigenvalueChecks",
    "SlopeChecks",
    "CongruenceChecks",
]
