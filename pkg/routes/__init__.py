# Blueprints: HTTP routes and CLI commands
