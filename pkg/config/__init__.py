# Configuration: environment defaults and run-config files
