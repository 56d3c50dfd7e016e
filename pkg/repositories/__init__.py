# File persistence for results and approximants
