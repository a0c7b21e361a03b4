"""
Benchmark service for storing benchmark rows in the database.
Provides functions to store, list and count rows of benchmark runs.
"""

import uuid
from typing import List, Optional, Sequence

from sqlalchemy import desc
from sqlalchemy.orm import Session
from sqlalchemy.exc import SQLAlchemyError

from ..core.database import DatabaseManager, get_db_manager
from ..core.logging import get_logger
from ..models.bench import BenchRow
from ..models.database import BenchRecord

logger = get_logger(__name__)


class BenchService:
    """Service class for managing benchmark rows in the database."""

    def __init__(self, db_manager: Optional[DatabaseManager] = None):
        """Initialize the service; the process-wide database manager is used unless one is given."""
        self._db_manager = db_manager

    @property
    def db(self) -> DatabaseManager:
        if self._db_manager is None:
            self._db_manager = get_db_manager()
        return self._db_manager

    def get_session(self) -> Session:
        """Get a database session."""
        return self.db.get_session()

    def store_rows(self, rows: Sequence[BenchRow], run_id: Optional[str] = None) -> str:
        """
        Store the rows of one benchmark run.

        Args:
            rows: Rows produced by bench_run
            run_id: Optional run identifier, otherwise a new one is generated

        Returns:
            The run identifier the rows were stored under

        Raises:
            SQLAlchemyError: If database operation fails
        """
        run_id = run_id or uuid.uuid4().hex
        session = self.get_session()
        try:
            session.add_all([BenchRecord.from_row(row, run_id) for row in rows])
            session.commit()
            logger.info(f"📝 Stored {len(rows)} benchmark rows for run {run_id}")
            return run_id

        except SQLAlchemyError as e:
            session.rollback()
            logger.error(f"❌ Failed to store benchmark rows: {str(e)}")
            raise
        finally:
            session.close()

    def list_rows(self, limit: int = 50, offset: int = 0, run_id: Optional[str] = None) -> List[BenchRecord]:
        """
        Retrieve stored rows, most recent first.

        Args:
            limit: Maximum number of rows to return
            offset: Number of rows to skip
            run_id: Optional run to restrict to

        Returns:
            List of BenchRecord instances
        """
        session = self.get_session()
        try:
            query = session.query(BenchRecord)
            if run_id:
                query = query.filter(BenchRecord.run_id == run_id)
            query = query.order_by(desc(BenchRecord.created_at), BenchRecord.instance_id, BenchRecord.backend)
            records = query.offset(offset).limit(limit).all()

            logger.info(f"📋 Retrieved {len(records)} benchmark rows")
            return records

        except SQLAlchemyError as e:
            logger.error(f"❌ Failed to retrieve benchmark rows: {str(e)}")
            return []
        finally:
            session.close()

    def count_rows(self, run_id: Optional[str] = None) -> int:
        """Count stored rows, optionally for one run."""
        session = self.get_session()
        try:
            query = session.query(BenchRecord)
            if run_id:
                query = query.filter(BenchRecord.run_id == run_id)
            count = query.count()
            logger.debug(f"🔢 Total benchmark rows: {count}")
            return count

        except SQLAlchemyError as e:
            logger.error(f"❌ Failed to count benchmark rows: {str(e)}")
            return 0
        finally:
            session.close()


# Create a global instance of the service
bench_service = BenchService()
