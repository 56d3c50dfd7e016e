# Fitting, benchmarking and acceptance services
