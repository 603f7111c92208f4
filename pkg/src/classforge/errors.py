class BudgetExceeded(RuntimeError):
    """A computation would exceed the configured enumeration budget."""
