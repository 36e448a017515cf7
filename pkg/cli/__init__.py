# CLI - subcommand handlers behind run.py
