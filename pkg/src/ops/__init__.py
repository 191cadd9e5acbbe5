"""Operations helpers (logging)."""
