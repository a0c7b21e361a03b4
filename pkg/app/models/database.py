"""
Database models for the Hypertrans application.
Contains the SQLAlchemy model for benchmark rows.
"""

import uuid
from datetime import datetime
from sqlalchemy import Column, DateTime, Float, Integer, String, Text
from sqlalchemy.orm import declarative_base
from sqlalchemy.dialects.postgresql import UUID as PG_UUID
from sqlalchemy.types import TypeDecorator, CHAR

from .bench import BenchRow

Base = declarative_base()


class GUID(TypeDecorator):
    """
    Platform-independent GUID type.
    Uses PostgreSQL's UUID type, otherwise uses CHAR(36).
    """
    impl = CHAR
    cache_ok = True

    def load_dialect_impl(self, dialect):
        if dialect.name == 'postgresql':
            return dialect.type_descriptor(PG_UUID())
        return dialect.type_descriptor(CHAR(36))

    def process_bind_param(self, value, dialect):
        if value is None:
            return value
        if not isinstance(value, uuid.UUID):
            value = uuid.UUID(str(value))
        return str(value)

    def process_result_value(self, value, dialect):
        if value is None or isinstance(value, uuid.UUID):
            return value
        return uuid.UUID(str(value))


class BenchRecord(Base):
    """
    SQLAlchemy model for benchmark rows.

    One row per (instance, algorithm) measurement, grouped by the run that produced it.
    Counts stay NULL for failed measurements, which carry an error message instead.
    """
    __tablename__ = "bench_rows"

    id = Column(GUID(), primary_key=True, default=uuid.uuid4, unique=True, nullable=False)
    run_id = Column(String(64), nullable=False, index=True)

    # Instance
    instance_id = Column(String(64), nullable=False)
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)

    # Measurement
    backend = Column(String(16), nullable=False)
    mt_count = Column(Integer, nullable=True)
    irr_count = Column(Integer, nullable=True)
    theta = Column(Float, nullable=True)
    tau = Column(Integer, nullable=True)
    ms = Column(Float, nullable=True)
    error = Column(Text, nullable=True)

    created_at = Column(DateTime, default=datetime.utcnow, nullable=False)

    def __repr__(self):
        return f"<BenchRecord(run_id={self.run_id}, instance_id={self.instance_id}, backend={self.backend})>"

    def to_row(self) -> BenchRow:
        """Convert back to the domain row."""
        return BenchRow(
            id=self.instance_id,
            n=self.n,
            m=self.m,
            backend=self.backend,
            mt_count=self.mt_count,
            irr_count=self.irr_count,
            theta=self.theta,
            tau=self.tau,
            ms=self.ms,
            error=self.error,
        )

    def to_dict(self):
        """Convert the model to a dictionary for JSON serialization."""
        return {
            'record_id': str(self.id),
            'run_id': self.run_id,
            **self.to_row().model_dump(),
            'created_at': self.created_at.isoformat(),
        }

    @classmethod
    def from_row(cls, row: BenchRow, run_id: str):
        """Create an instance from a domain row."""
        return cls(
            run_id=run_id,
            instance_id=row.id,
            n=row.n,
            m=row.m,
            backend=row.backend,
            mt_count=row.mt_count,
            irr_count=row.irr_count,
            theta=row.theta,
            tau=row.tau,
            ms=row.ms,
            error=row.error,
        )
