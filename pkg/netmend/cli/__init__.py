from netmend.cli import metrics, run

__all__ = ["metrics", "run"]
