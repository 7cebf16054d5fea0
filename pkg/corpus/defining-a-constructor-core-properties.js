var Animal = function (name) { this.name = name; };
Animal.prototype.isAnAnimal = true;

var animal = new Animal("pilou");

animal.constructor == Animal; // answers true
animal.__proto__ == animal.constructor.prototype; // answers true
animal.isAnAnimal; // answers true
// 'isAnAnimal' is not a property of the constructor but of
// objects it constructs
Animal.isAnAnimal; // answers undefined
