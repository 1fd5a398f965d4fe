"""路径矩阵、路径谱与路径能量工具"""
