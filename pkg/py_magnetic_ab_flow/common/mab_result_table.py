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

"""Module with the result table returned by the command line operations."""

# Imports
from typing import Any, Dict, Iterator, List, Sequence


class ResultTable:
    """
    Result table class.
    It holds the rows of a command result, in a fixed column order, and some summary values.
    """

    m_columns: List[str]
    m_rows: List[Dict[str, Any]]
    m_summary: Dict[str, Any]

    def __init__(self,
                 columns: Sequence[str]) -> None:
        """
        Construct class.

        Args:
            columns (list[str]): Column names
        """
        self.m_columns = list(columns)
        self.m_rows = []
        self.m_summary = {}

    def Columns(self) -> List[str]:
        return self.m_columns

    def AddRow(self,
               row: Dict[str, Any]) -> None:
        """
        Add a row.
        Missing columns are left empty.

        Args:
            row (dict): Row values by column name

        Raises:
            KeyError: If the row contains an unknown column
        """
        unknown = set(row) - set(self.m_columns)
        if unknown:
            raise KeyError(f"Unknown columns: {sorted(unknown)}")
        self.m_rows.append({col: row.get(col) for col in self.m_columns})

    def Rows(self) -> List[Dict[str, Any]]:
        return self.m_rows

    def SetSummary(self,
                   key: str,
                   value: Any) -> None:
        self.m_summary[key] = value

    def Summary(self) -> Dict[str, Any]:
        return self.m_summary

    def ToDict(self) -> Dict[str, Any]:
        """
        Get table as a dictionary.

        Returns:
            dict: Table as a dictionary, with "rows" and "summary" keys
        """
        return {"rows": self.m_rows, "summary": self.m_summary}

    def __iter__(self) -> Iterator[Dict[str, Any]]:
        return iter(self.m_rows)

    def __len__(self) -> int:
        return len(self.m_rows)
