# Approximants, fits, benchmark records and request schemas
