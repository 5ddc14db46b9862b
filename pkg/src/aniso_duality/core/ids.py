"""ID type definitions."""

from typing import NewType


CaseID = NewType("CaseID", str)
PropertyName = NewType("PropertyName", str)
