"""Common Pydantic schemas used across the command line."""

from typing import Any

from pydantic import BaseModel, Field


class ErrorResponse(BaseModel):
    """Error report written to stderr when a command fails."""

    error: str = Field(..., description="Error type or category")
    message: str = Field(..., description="Human-readable error message")
    exit_code: int = Field(..., description="Process exit code")
    stage: str | None = Field(None, description="Pipeline stage that failed")
    details: dict[str, Any] | None = Field(None, description="Additional error details")
