# API Routers package
