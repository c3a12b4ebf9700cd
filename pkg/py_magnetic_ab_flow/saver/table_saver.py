# Copyright (c) 2026 The py_magnetic_ab_flow authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

"""Module for saving result tables to file."""

# Imports
import csv
import io
import json
from enum import Enum, auto, unique
from typing import Any

from py_magnetic_ab_flow.common import ResultTable
from py_magnetic_ab_flow.utils import Utils


@unique
class TableFormats(Enum):
    """Enumerative for table output formats."""

    CSV = auto()
    JSON = auto()


class TableSaver:
    """
    Table saver class.
    It writes a result table as CSV, with a header row, floats at 17 significant digits and the summary as
    trailing "# key=value" lines, or as JSON {"rows": [...], "summary": {...}}.
    """

    m_table: ResultTable

    #
    # Public methods
    #

    def __init__(self,
                 table: ResultTable) -> None:
        """
        Construct class.

        Args:
            table (ResultTable object): ResultTable object
        """
        self.m_table = table

    def SaveToFile(self,
                   file_path: str,
                   fmt: TableFormats = TableFormats.CSV) -> None:
        """
        Save table to file.

        Args:
            file_path (str)               : File path
            fmt (TableFormats, optional)  : Output format, CSV by default

        Raises:
            TypeError: If the format is not of the correct type
        """
        content = self.ToString(fmt)
        with open(file_path, "w", encoding="utf-8", newline="") as f:
            f.write(content)

    def ToString(self,
                 fmt: TableFormats = TableFormats.CSV) -> str:
        """
        Get table as string.

        Args:
            fmt (TableFormats, optional): Output format, CSV by default

        Returns:
            str: Table as string

        Raises:
            TypeError: If the format is not of the correct type
        """
        if not isinstance(fmt, TableFormats):
            raise TypeError("Format is not an enumerative of TableFormats type")
        return self.__ToCsv() if fmt == TableFormats.CSV else self.__ToJson()

    #
    # Private methods
    #

    def __ToCsv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.m_table.Columns())
        for row in self.m_table.Rows():
            writer.writerow([self.__FormatCell(row[col]) for col in self.m_table.Columns()])
        for key, value in self.m_table.Summary().items():
            buffer.write(f"# {key}={self.__FormatCell(value)}\n")
        return buffer.getvalue()

    def __ToJson(self) -> str:
        return json.dumps(self.m_table.ToDict(), indent=4) + "\n"

    @staticmethod
    def __FormatCell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return str(value).lower()
        if isinstance(value, float):
            return Utils.FormatFloat(value)
        if isinstance(value, (list, tuple)):
            return ";".join(TableSaver.__FormatCell(item) for item in value)
        return str(value)
