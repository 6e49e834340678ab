"""
単体テストパッケージ
 
個別のモジュールやクラスの単体テストを格納します。
""" 