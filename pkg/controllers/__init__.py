# HTTP controllers
