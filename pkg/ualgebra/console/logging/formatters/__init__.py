from .report_formatter import ReportLogFormatter
from .search_formatter import SearchLogFormatter


FORMATTERS = {
    "ualgebra.formats.report": ReportLogFormatter(),
    "ualgebra.structures.search": SearchLogFormatter(),
}
