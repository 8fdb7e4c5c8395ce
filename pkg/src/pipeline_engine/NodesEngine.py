from abc import ABC, abstractmethod
from typing import Dict, Any

class Node(ABC):
    """
    Clase base abstracta de los nodos del pipeline.

    Un nodo es una etapa de cálculo o de exportación: recibe las salidas de
    sus nodos de entrada (o nada, si es el nodo de entrada del pipeline),
    calcula y entrega un diccionario {clave: valor} a sus nodos de salida.

    Atributos:
        name (str): Nombre único del nodo dentro del pipeline.
        inputs (list): Nodos que le envían datos.
        outputs (list): Nodos que reciben su resultado.
        logger: Logger compartido; el motor lo asigna antes de ejecutar.
    """
    def __init__(self, name: str):
        """
        Args:
            name (str): Nombre único para identificar el nodo.

        Raises:
            ValueError: Si no se proporciona un nombre válido.
        """
        if not name:
            raise ValueError("El nodo debe tener un nombre")
        self.name = name
        self.inputs = []
        self.outputs = []
        self.logger = None

    def add_input(self, node):
        if node not in self.inputs:
            self.inputs.append(node)

    def add_output(self, node):
        """Conecta `node` como salida y registra este nodo como su entrada."""
        if node not in self.outputs:
            self.outputs.append(node)
            node.add_input(self)

    @abstractmethod
    def run(self, data: Any) -> Any:
        """
        Ejecuta el cálculo del nodo.

        Args:
            data (Any): None para nodos de entrada; para el resto, un
                diccionario con las claves de `required_inputs`.

        Returns:
            Any: Normalmente {salida: pl.DataFrame}; None detiene la rama.
        """
        pass

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

class BaseNode(Node):
    """
    Nodo configurable desde la sección `params.config` del YAML.

    Atributos adicionales:
        config (Dict[str, Any]): Configuración del nodo.
        fallos (int): Contraejemplos o discrepancias detectadas en la última
            corrida; el CLI termina con código 1 si la suma sobre los nodos no es 0.
    """
    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name)
        self.config = config or {}
        self.fallos = 0

    @property
    def salida(self) -> str:
        """Clave bajo la que el nodo entrega su tabla (por defecto "data")."""
        return self.config.get("salida", "data")

    def run(self, data: Any) -> Any:
        raise NotImplementedError("Cada Nodo debe implementar un método run")
