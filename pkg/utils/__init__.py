"""工具模块包：日志、错误处理、配置、存储与格式化"""
