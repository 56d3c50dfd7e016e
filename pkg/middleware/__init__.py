# Error handlers
