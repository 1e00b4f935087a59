# -*- coding: utf-8 -*-

from fcover.formats.instance import (
    InstanceFile,
    emit_instance,
    parse_instance,
    parse_instance_file,
    read_instance,
    write_instance,
)
from fcover.formats.report import (
    REPORT_FORMAT_JSON,
    REPORT_FORMAT_MSGPACK,
    REPORT_FORMATS,
    SCHEMA,
    RunReport,
    dumps_report,
    loads_report,
)
from fcover.formats.solution import (
    SolutionFile,
    emit_solution,
    parse_solution,
    read_solution,
    write_solution,
)

__all__ = [
    "InstanceFile",
    "REPORT_FORMATS",
    "REPORT_FORMAT_JSON",
    "REPORT_FORMAT_MSGPACK",
    "RunReport",
    "SCHEMA",
    "SolutionFile",
    "dumps_report",
    "emit_instance",
    "emit_solution",
    "loads_report",
    "parse_instance",
    "parse_instance_file",
    "parse_solution",
    "read_instance",
    "read_solution",
    "write_instance",
    "write_solution",
]
