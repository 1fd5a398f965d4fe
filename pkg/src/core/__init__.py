# 配置、日志、异常与数据模型
