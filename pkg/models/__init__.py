"""数据模型包

精确系数、分拆、对称函数、置换、迹、偏序集、P-表、矩阵与平面网络
"""
