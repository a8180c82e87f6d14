"""服务层模块包"""
